import { column, hasColumn, requireColumns, Table } from "./csv.js";
import { fitLogLog } from "./fit.js";
import { Figure, LegendEntry } from "./svg.js";

export type FigureKind = "scaling" | "energy" | "dispersion";

export interface FigureSpec {
    kind: FigureKind;
    inputs: string[];
    output: string;
    h?: number;
}

export interface EnergyInput {
    label: string;
    table: Table;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

/** Log-log error-vs-step-size figure with fitted slopes and a slope-4 guide. */
export function buildScalingPlot(table: Table): string {
    requireColumns(table, ["h", "err_mod_ham", "err_mod_var"]);
    const hs = column(table, "h");
    const series: [string, number[]][] = [
        ["mod-ham", column(table, "err_mod_ham")],
        ["mod-var", column(table, "err_mod_var")],
    ];

    const finite = (vals: number[]) => vals.filter((v) => Number.isFinite(v) && v > 0);
    const allErr = finite(series[0][1]).concat(finite(series[1][1]));
    if (allErr.length === 0) {
        throw new Error("no finite error values to plot");
    }
    const hmin = Math.min(...hs);
    const hmax = Math.max(...hs);

    const fig = new Figure({
        title: "Midpoint vs modified equations: final-time error",
        xlabel: "step size h",
        ylabel: "L2 x L2 error at final time",
        xdomain: [hmin / 1.3, hmax * 1.3],
        ydomain: [Math.min(...allErr) / 4, Math.max(...allErr) * 4],
        xlog: true,
        ylog: true,
    });

    const legend: LegendEntry[] = [];
    for (let i = 0; i < series.length; i++) {
        const [name, errs] = series[i];
        const slope = fitLogLog(hs, errs);
        const pts = hs.map((h, j) => [h, errs[j]] as [number, number]);
        fig.line(pts, PALETTE[i]);
        for (const [x, y] of pts) fig.marker(x, y, PALETTE[i]);
        legend.push({ label: `${name}: slope ${slope.toFixed(3)}`, color: PALETTE[i] });
    }

    // slope-4 guide anchored slightly below the data
    const anchor = Math.max(...finite(series[0][1])) * 0.45;
    const c4 = anchor / Math.pow(hmax, 4);
    fig.line(
        hs.map((h) => [h, c4 * Math.pow(h, 4)] as [number, number]),
        "#777",
        { dash: "6,4" },
    );
    legend.push({ label: "slope 4 reference", color: "#777", dash: "6,4" });
    fig.legend(legend);
    return fig.render();
}

/** Energy deviation H(t) - H(0) traces; truncated traces get a blow-up mark. */
export function buildEnergyPlot(inputs: EnergyInput[]): string {
    if (inputs.length === 0) {
        throw new Error("energy figure needs at least one CSV");
    }
    const series = inputs.map(({ label, table }) => {
        requireColumns(table, ["t", "H"]);
        const ts = column(table, "t");
        const hsRaw = column(table, "H");
        const dh = hsRaw.map((v) => v - hsRaw[0]);
        let blown = false;
        if (hasColumn(table, "blowup")) {
            blown = column(table, "blowup").some((v) => v === 1);
        }
        return { label, ts, dh, blown };
    });

    const calm = series.filter((s) => !s.blown);
    const reference = calm.length > 0 ? calm : series;
    let amp = 0;
    for (const s of reference) {
        for (const v of s.dh) {
            if (Number.isFinite(v)) amp = Math.max(amp, Math.abs(v));
        }
    }
    if (amp === 0) amp = 1e-12;
    const tmax = Math.max(...series.map((s) => s.ts[s.ts.length - 1]));

    const fig = new Figure({
        title: "Energy deviation along the numerical flows",
        xlabel: "time t",
        ylabel: "H(t) - H(0)",
        xdomain: [0, tmax],
        ydomain: [-1.6 * amp, 1.6 * amp],
    });

    const legend: LegendEntry[] = [];
    series.forEach((s, i) => {
        const color = PALETTE[i % PALETTE.length];
        fig.line(s.ts.map((t, j) => [t, s.dh[j]] as [number, number]), color);
        if (s.blown) {
            const tEnd = s.ts[s.ts.length - 1];
            const inside = s.dh.filter((v) => Math.abs(v) <= 1.6 * amp).length;
            const yMark = inside > 0 ? s.dh[inside - 1] : 1.2 * amp;
            fig.marker(tEnd, yMark, color);
            fig.annotate(tEnd, 1.35 * amp, "blow-up", color);
        }
        legend.push({ label: s.blown ? `${s.label} (blow-up)` : s.label, color });
    });
    fig.legend(legend);
    return fig.render();
}

/** Dispersion curves of the three linear theories with their frequency caps. */
export function buildDispersionPlot(table: Table, h?: number): string {
    requireColumns(table, ["k", "k_exact", "omega_ham", "omega_var", "a_k"]);
    const ks = column(table, "k");
    const ak = column(table, "a_k");
    const kmax = Math.max(...ks);
    const ymax = h !== undefined ? 1.4 * (Math.PI / h) : 1.3 * Math.max(...ak);

    const fig = new Figure({
        title: "Linear dispersion relations",
        xlabel: "wave number k",
        ylabel: "frequency",
        xdomain: [0, kmax],
        ydomain: [0, ymax],
    });

    const curves: [string, string, string | undefined][] = [
        ["k_exact", "#999", "4,4"],
        ["omega_ham", "#d62728", undefined],
        ["omega_var", "#2ca02c", undefined],
        ["a_k", "#1f77b4", undefined],
    ];
    const legend: LegendEntry[] = [];
    for (const [name, color, dash] of curves) {
        const ys = column(table, name);
        fig.line(ks.map((k, i) => [k, ys[i]] as [number, number]), color, { dash });
        legend.push({ label: name, color, dash });
    }

    if (h !== undefined) {
        for (const [value, label] of [
            [Math.PI / h, "pi/h"],
            [Math.sqrt(6) / h, "sqrt(6)/h"],
        ] as [number, string][]) {
            fig.line([[0, value], [kmax, value]], "#555", { dash: "2,4", width: 1 });
            fig.annotate(kmax * 0.84, value * 1.03, label, "#555");
        }
    }
    fig.legend(legend);
    return fig.render();
}
