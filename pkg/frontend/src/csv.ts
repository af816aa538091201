import * as fs from "node:fs";

export interface Table {
    header: string[];
    rows: number[][];
}

export function parseCsv(text: string): Table {
    const lines = text.split(/\r?\n/).filter((line) => line.trim().length > 0);
    if (lines.length === 0) {
        throw new Error("CSV is empty");
    }
    const header = lines[0].split(",").map((s) => s.trim());
    if (lines.length === 1) {
        throw new Error("CSV has a header but no data rows");
    }
    const rows = lines.slice(1).map((line, i) => {
        const parts = line.split(",");
        if (parts.length !== header.length) {
            throw new Error(`row ${i + 2}: expected ${header.length} fields, got ${parts.length}`);
        }
        return parts.map((p) => {
            const v = Number(p);
            if (Number.isNaN(v) && p.trim().toLowerCase() !== "nan") {
                throw new Error(`row ${i + 2}: not a number: ${p}`);
            }
            return v;
        });
    });
    return { header, rows };
}

export function loadCsv(path: string): Table {
    let text: string;
    try {
        text = fs.readFileSync(path, "utf8");
    } catch {
        throw new Error(`cannot read CSV file: ${path}`);
    }
    try {
        return parseCsv(text);
    } catch (err) {
        throw new Error(`${path}: ${(err as Error).message}`);
    }
}

export function column(table: Table, name: string): number[] {
    const idx = table.header.indexOf(name);
    if (idx < 0) {
        throw new Error(`missing column '${name}' (have: ${table.header.join(", ")})`);
    }
    return table.rows.map((row) => row[idx]);
}

export function hasColumn(table: Table, name: string): boolean {
    return table.header.includes(name);
}

export function requireColumns(table: Table, names: string[]): void {
    for (const name of names) {
        column(table, name);
    }
}
