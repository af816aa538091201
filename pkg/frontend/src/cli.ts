#!/usr/bin/env node
// Usage: plot <scaling|energy|dispersion> --in <csv> [--in <csv> ...] --out <svg> [--h <value>]
//
// Reads CSV output of the midwave experiment harness and writes a static
// SVG figure.  The tool never recomputes physics: it only draws what the
// CSVs contain.  When a meta.json sits next to an input CSV it is used
// for series labels (config.system) and the step size (config.h).

import * as fs from "node:fs";
import * as path from "node:path";
import { pathToFileURL } from "node:url";

import { loadCsv } from "./csv.js";
import { buildDispersionPlot, buildEnergyPlot, buildScalingPlot, FigureKind } from "./plots.js";

interface CliArgs {
    kind: FigureKind;
    inputs: string[];
    output: string;
    h?: number;
}

function usage(): string {
    return "usage: plot <scaling|energy|dispersion> --in <csv> [--in <csv> ...] --out <svg> [--h <value>]";
}

export function parseArgs(argv: string[]): CliArgs {
    if (argv.length === 0) throw new Error(usage());
    const kind = argv[0];
    if (kind !== "scaling" && kind !== "energy" && kind !== "dispersion") {
        throw new Error(`unknown figure kind '${kind}'\n${usage()}`);
    }
    const inputs: string[] = [];
    let output: string | undefined;
    let h: number | undefined;
    for (let i = 1; i < argv.length; i++) {
        switch (argv[i]) {
            case "--in":
                inputs.push(argv[++i]);
                break;
            case "--out":
                output = argv[++i];
                break;
            case "--h":
                h = Number(argv[++i]);
                if (!Number.isFinite(h) || h <= 0) throw new Error("--h must be a positive number");
                break;
            default:
                throw new Error(`unknown argument '${argv[i]}'\n${usage()}`);
        }
    }
    if (inputs.length === 0 || inputs.some((v) => v === undefined)) {
        throw new Error(`at least one --in <csv> is required\n${usage()}`);
    }
    if (!output) throw new Error(`--out <svg> is required\n${usage()}`);
    return { kind, inputs, output, h };
}

interface Meta {
    system?: string;
    h?: number;
}

function readMeta(csvPath: string): Meta {
    const metaPath = path.join(path.dirname(csvPath), "meta.json");
    try {
        const raw = JSON.parse(fs.readFileSync(metaPath, "utf8"));
        return { system: raw?.config?.system, h: raw?.config?.h };
    } catch {
        return {};
    }
}

export function main(argv: string[]): number {
    let args: CliArgs;
    try {
        args = parseArgs(argv);
    } catch (err) {
        console.error((err as Error).message);
        return 1;
    }

    try {
        let svg: string;
        if (args.kind === "scaling") {
            svg = buildScalingPlot(loadCsv(args.inputs[0]));
        } else if (args.kind === "energy") {
            const inputs = args.inputs.map((file) => ({
                label: readMeta(file).system ?? path.basename(file, path.extname(file)),
                table: loadCsv(file),
            }));
            svg = buildEnergyPlot(inputs);
        } else {
            const h = args.h ?? readMeta(args.inputs[0]).h;
            svg = buildDispersionPlot(loadCsv(args.inputs[0]), h);
        }
        fs.mkdirSync(path.dirname(path.resolve(args.output)), { recursive: true });
        fs.writeFileSync(args.output, svg);
    } catch (err) {
        console.error((err as Error).message);
        return 1;
    }
    return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
    process.exit(main(process.argv.slice(2)));
}
