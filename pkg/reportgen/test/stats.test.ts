import { describe, expect, it } from "vitest";

import { fmt, mean, roundHalfEven, stderr } from "../src/stats.js";

describe("roundHalfEven", () => {
    it("rounds halves to the even neighbor", () => {
        expect(roundHalfEven(0.5)).toBe(0);
        expect(roundHalfEven(1.5)).toBe(2);
        expect(roundHalfEven(2.5)).toBe(2);
        expect(roundHalfEven(17.5)).toBe(18);
        expect(roundHalfEven(10.5)).toBe(10);
        expect(roundHalfEven(9.5)).toBe(10);
    });
    it("rounds non-halves normally", () => {
        expect(roundHalfEven(2.4)).toBe(2);
        expect(roundHalfEven(2.6)).toBe(3);
        expect(roundHalfEven(28)).toBe(28);
    });
});

describe("stderr", () => {
    it("uses the sample standard deviation (ddof=1)", () => {
        // std([20, 15], ddof=1) = sqrt(12.5); SE = sqrt(12.5)/sqrt(2) = 2.5
        expect(stderr([20, 15])).toBeCloseTo(2.5, 12);
        expect(stderr([30, 26])).toBeCloseTo(2.0, 12);
        expect(stderr([7])).toBe(0);
    });
});

describe("mean", () => {
    it("averages and rejects empty input", () => {
        expect(mean([20, 15])).toBe(17.5);
        expect(() => mean([])).toThrow();
    });
});

describe("fmt", () => {
    it("formats deterministically without trailing zeros", () => {
        expect(fmt(1)).toBe("1");
        expect(fmt(0.5)).toBe("0.5");
        expect(fmt(120.1)).toBe("120.1");
        expect(fmt(100)).toBe("100");
    });
});
