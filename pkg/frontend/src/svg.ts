/** Small static-SVG chart builder: enough for line charts with linear or
 *  log axes, dashed reference lines, legends and annotations. */

export interface AxisOptions {
    title: string;
    xlabel: string;
    ylabel: string;
    xdomain: [number, number];
    ydomain: [number, number];
    xlog?: boolean;
    ylog?: boolean;
}

export interface LineOptions {
    dash?: string;
    width?: number;
}

export interface LegendEntry {
    label: string;
    color: string;
    dash?: string;
}

const WIDTH = 680;
const HEIGHT = 470;
const MARGIN = { left: 78, right: 24, top: 42, bottom: 58 };

function escapeXml(s: string): string {
    return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function fmtTick(v: number): string {
    if (v === 0) return "0";
    const a = Math.abs(v);
    if (a >= 1e4 || a < 1e-3) return v.toExponential(0).replace("e+", "e");
    return String(Number(v.toPrecision(6)));
}

function linearTicks(lo: number, hi: number, target = 5): number[] {
    const span = hi - lo;
    if (span <= 0) return [lo];
    const raw = span / target;
    const mag = Math.pow(10, Math.floor(Math.log10(raw)));
    const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= target + 1) ?? 10 * mag;
    const out: number[] = [];
    for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12 * span; v += step) {
        out.push(Math.abs(v) < 1e-12 * span ? 0 : v);
    }
    return out;
}

function logTicks(lo: number, hi: number): number[] {
    const out: number[] = [];
    const first = Math.floor(Math.log10(lo));
    const last = Math.ceil(Math.log10(hi));
    const subs = last - first <= 2 ? [1, 2, 5] : [1];
    for (let d = first; d <= last; d++) {
        for (const m of subs) {
            const v = m * Math.pow(10, d);
            if (v >= lo * 0.999 && v <= hi * 1.001) out.push(v);
        }
    }
    return out;
}

export class Figure {
    private readonly opts: AxisOptions;
    private readonly body: string[] = [];

    constructor(opts: AxisOptions) {
        this.opts = opts;
    }

    private sx(v: number): number {
        const [lo, hi] = this.opts.xdomain;
        const t = this.opts.xlog
            ? (Math.log(v) - Math.log(lo)) / (Math.log(hi) - Math.log(lo))
            : (v - lo) / (hi - lo);
        return MARGIN.left + t * (WIDTH - MARGIN.left - MARGIN.right);
    }

    private sy(v: number): number {
        const [lo, hi] = this.opts.ydomain;
        const t = this.opts.ylog
            ? (Math.log(v) - Math.log(lo)) / (Math.log(hi) - Math.log(lo))
            : (v - lo) / (hi - lo);
        return HEIGHT - MARGIN.bottom - t * (HEIGHT - MARGIN.top - MARGIN.bottom);
    }

    private inDomain(x: number, y: number): boolean {
        const [xlo, xhi] = this.opts.xdomain;
        const [ylo, yhi] = this.opts.ydomain;
        return (
            Number.isFinite(x) && Number.isFinite(y) &&
            x >= xlo && x <= xhi && y >= ylo && y <= yhi &&
            (!this.opts.xlog || x > 0) && (!this.opts.ylog || y > 0)
        );
    }

    /** Polyline in data coordinates; segments leaving the domain are broken. */
    line(points: [number, number][], color: string, opts: LineOptions = {}): void {
        const runs: string[][] = [[]];
        for (const [x, y] of points) {
            if (this.inDomain(x, y)) {
                runs[runs.length - 1].push(`${this.sx(x).toFixed(2)},${this.sy(y).toFixed(2)}`);
            } else if (runs[runs.length - 1].length > 0) {
                runs.push([]);
            }
        }
        const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
        const width = opts.width ?? 1.6;
        for (const run of runs) {
            if (run.length < 2) continue;
            this.body.push(
                `<polyline fill="none" stroke="${color}" stroke-width="${width}"${dash} points="${run.join(" ")}"/>`,
            );
        }
    }

    marker(x: number, y: number, color: string): void {
        if (!this.inDomain(x, y)) return;
        this.body.push(
            `<circle cx="${this.sx(x).toFixed(2)}" cy="${this.sy(y).toFixed(2)}" r="3.5" fill="${color}"/>`,
        );
    }

    /** Text placed at data coordinates (clamped into the frame). */
    annotate(x: number, y: number, label: string, color = "#333"): void {
        const px = Math.min(Math.max(this.sx(x), MARGIN.left + 4), WIDTH - MARGIN.right - 4);
        const py = Math.min(Math.max(this.sy(y), MARGIN.top + 12), HEIGHT - MARGIN.bottom - 4);
        this.body.push(
            `<text x="${px.toFixed(2)}" y="${py.toFixed(2)}" font-size="12" fill="${color}">${escapeXml(label)}</text>`,
        );
    }

    legend(entries: LegendEntry[]): void {
        const x0 = MARGIN.left + 12;
        let y = MARGIN.top + 16;
        const widest = Math.max(...entries.map((e) => e.label.length));
        this.body.push(
            `<rect x="${x0 - 6}" y="${y - 13}" width="${widest * 6.6 + 40}" height="${entries.length * 17 + 8}" fill="white" fill-opacity="0.85" stroke="#999"/>`,
        );
        for (const entry of entries) {
            const dash = entry.dash ? ` stroke-dasharray="${entry.dash}"` : "";
            this.body.push(
                `<line x1="${x0}" y1="${y - 4}" x2="${x0 + 22}" y2="${y - 4}" stroke="${entry.color}" stroke-width="2"${dash}/>`,
            );
            this.body.push(
                `<text x="${x0 + 28}" y="${y}" font-size="12" fill="#222">${escapeXml(entry.label)}</text>`,
            );
            y += 17;
        }
    }

    render(): string {
        const [xlo, xhi] = this.opts.xdomain;
        const [ylo, yhi] = this.opts.ydomain;
        const frame: string[] = [];
        frame.push(`<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
        frame.push(
            `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${WIDTH - MARGIN.left - MARGIN.right}" height="${HEIGHT - MARGIN.top - MARGIN.bottom}" fill="none" stroke="#444"/>`,
        );

        const xticks = this.opts.xlog ? logTicks(xlo, xhi) : linearTicks(xlo, xhi);
        for (const v of xticks) {
            const px = this.sx(v);
            frame.push(`<line x1="${px}" y1="${HEIGHT - MARGIN.bottom}" x2="${px}" y2="${HEIGHT - MARGIN.bottom + 5}" stroke="#444"/>`);
            frame.push(`<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${HEIGHT - MARGIN.bottom}" stroke="#eee"/>`);
            frame.push(
                `<text x="${px}" y="${HEIGHT - MARGIN.bottom + 18}" font-size="11" text-anchor="middle" fill="#222">${fmtTick(v)}</text>`,
            );
        }
        const yticks = this.opts.ylog ? logTicks(ylo, yhi) : linearTicks(ylo, yhi);
        for (const v of yticks) {
            const py = this.sy(v);
            frame.push(`<line x1="${MARGIN.left - 5}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#444"/>`);
            frame.push(`<line x1="${MARGIN.left}" y1="${py}" x2="${WIDTH - MARGIN.right}" y2="${py}" stroke="#eee"/>`);
            frame.push(
                `<text x="${MARGIN.left - 8}" y="${py + 4}" font-size="11" text-anchor="end" fill="#222">${fmtTick(v)}</text>`,
            );
        }

        frame.push(
            `<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${MARGIN.top - 14}" font-size="14" text-anchor="middle" fill="#111">${escapeXml(this.opts.title)}</text>`,
        );
        frame.push(
            `<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 14}" font-size="12" text-anchor="middle" fill="#111">${escapeXml(this.opts.xlabel)}</text>`,
        );
        frame.push(
            `<text x="20" y="${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2}" font-size="12" text-anchor="middle" fill="#111" transform="rotate(-90 20 ${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2})">${escapeXml(this.opts.ylabel)}</text>`,
        );

        return [
            `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
            ...frame,
            ...this.body,
            "</svg>",
        ].join("\n");
    }
}
