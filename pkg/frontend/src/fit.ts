export function linearSlope(xs: number[], ys: number[]): number {
    if (xs.length !== ys.length || xs.length < 2) {
        throw new Error("slope fit needs at least two points");
    }
    const n = xs.length;
    const mx = xs.reduce((a, b) => a + b, 0) / n;
    const my = ys.reduce((a, b) => a + b, 0) / n;
    let num = 0;
    let den = 0;
    for (let i = 0; i < n; i++) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den === 0) {
        throw new Error("slope fit needs distinct x values");
    }
    return num / den;
}

/** Least-squares slope of log(y) against log(x), skipping nonpositive pairs. */
export function fitLogLog(xs: number[], ys: number[]): number {
    const lx: number[] = [];
    const ly: number[] = [];
    for (let i = 0; i < xs.length; i++) {
        if (xs[i] > 0 && ys[i] > 0 && Number.isFinite(ys[i])) {
            lx.push(Math.log(xs[i]));
            ly.push(Math.log(ys[i]));
        }
    }
    return linearSlope(lx, ly);
}
