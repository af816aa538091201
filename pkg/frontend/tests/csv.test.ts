import { describe, expect, it } from "vitest";

import { column, hasColumn, parseCsv } from "../src/csv.js";

describe("parseCsv", () => {
    it("parses a numeric table", () => {
        const table = parseCsv("a,b\n1,2\n3,4.5\n");
        expect(table.header).toEqual(["a", "b"]);
        expect(table.rows).toEqual([
            [1, 2],
            [3, 4.5],
        ]);
    });

    it("rejects empty input", () => {
        expect(() => parseCsv("")).toThrow(/empty/);
        expect(() => parseCsv("\n\n")).toThrow(/empty/);
    });

    it("rejects a header without rows", () => {
        expect(() => parseCsv("a,b\n")).toThrow(/no data rows/);
    });

    it("rejects ragged rows", () => {
        expect(() => parseCsv("a,b\n1,2,3\n")).toThrow(/row 2/);
    });

    it("rejects non numeric fields", () => {
        expect(() => parseCsv("a,b\n1,zzz\n")).toThrow(/not a number/);
    });

    it("accepts nan cells", () => {
        const table = parseCsv("a,b\n1,nan\n");
        expect(Number.isNaN(table.rows[0][1])).toBe(true);
    });
});

describe("column", () => {
    const table = parseCsv("t,H\n0,1\n1,2\n");

    it("extracts by name", () => {
        expect(column(table, "H")).toEqual([1, 2]);
    });

    it("reports missing columns", () => {
        expect(() => column(table, "J")).toThrow(/missing column 'J'/);
        expect(hasColumn(table, "J")).toBe(false);
    });
});
