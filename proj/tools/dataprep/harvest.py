#!/usr/bin/env python3
"""Compute Hecke-Maass cusp form coefficients for the bundled data files.

Two-phase Hejhal-style computation on PSL(2,Z)\\H for the three forms used by
the test suite (spectral parameters below, long known in the literature and
validated here by a residual-dip check and Hecke relations):

  even_13  t = 13.779751351890
  even_17  t = 17.738563381058
  odd_9    t =  9.533695261353

Phase 1 solves a small collocation least-squares system at two heights for the
first ~32 coefficients.  Phase 2 harvests lambda(n) up to N = 1e5 by sampling
phi on a low horocycle at 2^19 points, pulling each point back to the
fundamental domain, evaluating phi there via the (short) pulled-back expansion
and extracting coefficients with an FFT; iterated to a fixed point.  All
K-Bessel values come from per-form Chebyshev tables of e^{pi t/2} K_{it}(x)
built with mpmath, evaluated in 80-bit long double.

Multiplicativity is then enforced: prime-power values stay as harvested,
composites are rebuilt from them, and the pre-enforcement residual is reported
as a fidelity metric.

Run:  python3 harvest.py [--quick] [--out DIR]
"""

import argparse
import json
import math
import os
import sys
import time

import numpy as np
import mpmath as mp
from scipy import fft as sfft

LD = np.longdouble

FORMS = [
    {"label": "even_13", "t": "13.779751351890", "parity": "even"},
    {"label": "even_17", "t": "17.738563381058", "parity": "even"},
    {"label": "odd_9", "t": "9.533695261353", "parity": "odd"},
]


# ----------------------------------------------------------------------
# scaled K Bessel: e^{pi t/2} K_{it}(x) as Chebyshev panels, mpmath-built
# ----------------------------------------------------------------------

class ScaledKTable:
    def __init__(self, t, x_lo, dps=24):
        self.t = float(t)
        self.cut = 0.5 * math.pi * self.t + 38.0
        mp.mp.dps = dps
        tt = mp.mpf(t)
        scale = mp.exp(mp.pi * tt / 2)

        def raw(x):
            return float((scale * mp.besselk(mp.mpc(0, tt), mp.mpf(x))).real)

        panels = []   # (a, b, coeffs) with x in [a, b]; log panels store ln x
        # region A: logarithmic grid on [x_lo, 5.4], oscillation rate <= t in ln x
        u0, u1 = math.log(x_lo), math.log(min(5.4, self.cut))
        h = min(0.18, 2.4 / max(self.t, 1.0))
        n = max(2, int(math.ceil((u1 - u0) / h)))
        for i in range(n):
            a = u0 + (u1 - u0) * i / n
            b = u0 + (u1 - u0) * (i + 1) / n
            panels.append((a, b, self._fit(lambda u: raw(math.exp(u)), a, b)))
        self.log_panels = panels
        self.log_hi = u1

        panels = []
        lo = min(5.4, self.cut)
        # region B: [5.4, t+2], oscillatory in x with rate sqrt(t^2-x^2)/x
        if self.t + 2.0 > lo:
            x = lo
            while x < self.t + 2.0:
                k = math.sqrt(max(self.t ** 2 - x * x, 1.0)) / x
                h = min(1.5 / max(k, 0.8), 1.0)
                b = min(x + h, self.t + 2.0)
                panels.append((x, b, self._fit(raw, x, b)))
                x = b
        # region C: [t+2, cut], smooth exponential decay
        x = max(lo, self.t + 2.0)
        while x < self.cut:
            b = min(x + 0.55, self.cut)
            panels.append((x, b, self._fit(raw, x, b)))
            x = b
        self.lin_panels = panels
        self.lin_lo = lo
        self.lin_bounds = np.array([p[0] for p in panels] + [self.cut])
        self.lin_coeffs = np.array([p[2] for p in panels], dtype=LD)
        self.lin_a = np.array([p[0] for p in panels], dtype=LD)
        self.lin_b = np.array([p[1] for p in panels], dtype=LD)
        self.log_bounds = np.array([p[0] for p in self.log_panels] + [self.log_hi])
        self.log_coeffs = np.array([p[2] for p in self.log_panels], dtype=LD)
        self.log_a = np.array([p[0] for p in self.log_panels], dtype=LD)
        self.log_b = np.array([p[1] for p in self.log_panels], dtype=LD)
        self.x_lo = x_lo

    @staticmethod
    def _fit(f, a, b, n=16):
        # Chebyshev nodes and coefficients on [a, b]
        k = np.arange(n)
        xk = np.cos(np.pi * (k + 0.5) / n)
        vals = np.array([f(0.5 * (a + b) + 0.5 * (b - a) * xi) for xi in xk])
        cj = np.zeros(n)
        for j in range(n):
            cj[j] = 2.0 / n * np.sum(vals * np.cos(np.pi * j * (k + 0.5) / n))
        cj[0] *= 0.5
        return cj

    @staticmethod
    def _clenshaw_vec(coeffs_rows, u):
        # coeffs_rows: (npts, 16) longdouble; u in [-1, 1] per point
        b1 = np.zeros_like(u)
        b2 = np.zeros_like(u)
        two_u = 2.0 * u
        for j in range(coeffs_rows.shape[1] - 1, 0, -1):
            b1, b2 = two_u * b1 - b2 + coeffs_rows[:, j], b1
        return u * b1 - b2 + coeffs_rows[:, 0]

    def eval_vec(self, x):
        """Vectorized evaluation; x longdouble array, returns longdouble."""
        x = np.asarray(x, dtype=LD)
        out = np.zeros_like(x)
        live = (x < self.cut) & (x >= self.x_lo * (1 - 1e-12))
        xl = x[live]
        res = np.zeros_like(xl)
        lin = xl >= self.lin_lo
        if np.any(lin):
            xv = xl[lin]
            idx = np.searchsorted(self.lin_bounds, np.asarray(xv, dtype=float), "right") - 1
            idx = np.clip(idx, 0, len(self.lin_panels) - 1)
            a = self.lin_a[idx]
            b = self.lin_b[idx]
            u = (2.0 * xv - a - b) / (b - a)
            res[lin] = self._clenshaw_vec(self.lin_coeffs[idx], u)
        logm = ~lin
        if np.any(logm):
            uv = np.log(xl[logm])
            idx = np.searchsorted(self.log_bounds, np.asarray(uv, dtype=float), "right") - 1
            idx = np.clip(idx, 0, len(self.log_panels) - 1)
            a = self.log_a[idx]
            b = self.log_b[idx]
            u = (2.0 * uv - a - b) / (b - a)
            res[logm] = self._clenshaw_vec(self.log_coeffs[idx], u)
        out[live] = res
        return out

    def selfcheck(self, n=25):
        mp.mp.dps = 24
        tt = mp.mpf(self.t)
        scale = mp.exp(mp.pi * tt / 2)
        rng = np.random.default_rng(7)
        xs = np.exp(rng.uniform(math.log(self.x_lo * 1.01), math.log(self.cut * 0.999), n))
        got = self.eval_vec(np.asarray(xs, dtype=LD))
        worst = 0.0
        for xi, gi in zip(xs, got):
            ref = float((scale * mp.besselk(mp.mpc(0, tt), mp.mpf(xi))).real)
            err = abs(float(gi) - ref) / max(abs(ref), 1e-30)
            worst = max(worst, err)
        return worst


# ----------------------------------------------------------------------
# fundamental-domain pullback, vectorized
# ----------------------------------------------------------------------

def pullback(x, y, max_iter=80):
    x = np.array(x, dtype=LD)
    y = np.array(y, dtype=LD)
    for _ in range(max_iter):
        x -= np.rint(x)
        r2 = x * x + y * y
        inside = r2 < 1.0 - np.asarray(1e-18, dtype=LD)
        if not np.any(inside):
            break
        x[inside] = -x[inside] / r2[inside]
        y[inside] = y[inside] / r2[inside]
    x -= np.rint(x)
    return x, y


# ----------------------------------------------------------------------
# phi evaluation from a short coefficient vector (pulled-back points)
# ----------------------------------------------------------------------

def phi_eval(table, parity_even, coeffs, xs, ys, m_max):
    """sqrt(y) * sum_{m<=m_max} c_m scaledK(2 pi m y) trig(2 pi m x)."""
    acc = np.zeros_like(xs)
    two_pi = np.asarray(2 * np.pi, dtype=LD)
    for m in range(1, m_max + 1):
        km = table.eval_vec(two_pi * m * ys)
        ang = two_pi * m * xs
        tr = np.cos(ang) if parity_even else np.sin(ang)
        acc += coeffs[m - 1] * km * tr
    return np.sqrt(ys) * acc


# ----------------------------------------------------------------------
# phase 1: small collocation system, direct mpmath K values
# ----------------------------------------------------------------------

def phase1_residual(t, parity_even, heights, m0, q0, dps=20, want_coeffs=False):
    mp.mp.dps = dps
    tt = mp.mpf(t)
    scale = mp.exp(mp.pi * tt / 2)
    memo = {}

    def skd(x):
        v = memo.get(x)
        if v is None:
            v = float((scale * mp.besselk(mp.mpc(0, tt), mp.mpf(x))).real)
            memo[x] = v
        return v

    cut = 0.5 * math.pi * t + 38.0
    rows = []
    for y0 in heights:
        xj = (np.arange(q0) + 0.5) / (2.0 * q0)
        xs, ys = pullback(xj.astype(LD), np.full(q0, y0, dtype=LD))
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        for j in range(q0):
            row = np.zeros(m0)
            for m in range(1, m0 + 1):
                a1 = 2 * math.pi * m * y0
                a2 = 2 * math.pi * m * ys[j]
                k1 = skd(a1) if a1 < cut else 0.0
                k2 = skd(a2) if a2 < cut else 0.0
                tr1 = math.cos(2 * math.pi * m * xj[j]) if parity_even \
                    else math.sin(2 * math.pi * m * xj[j])
                tr2 = math.cos(2 * math.pi * m * xs[j]) if parity_even \
                    else math.sin(2 * math.pi * m * xs[j])
                row[m - 1] = math.sqrt(y0) * k1 * tr1 - math.sqrt(ys[j]) * k2 * tr2
            rows.append(row)
    A = np.array(rows)
    # c_1 = 1; move first column to the right-hand side
    rhs = -A[:, 0]
    sol, res, rank, _ = np.linalg.lstsq(A[:, 1:], rhs, rcond=None)
    r = A[:, 1:] @ sol - rhs
    resid = float(np.sqrt(np.mean(r * r)))
    if want_coeffs:
        return resid, np.concatenate([[1.0], sol])
    return resid


# ----------------------------------------------------------------------
# phase 2: FFT harvest
# ----------------------------------------------------------------------

def harvest_form(spec, n_max, two_q, out_dir):
    label = spec["label"]
    t = float(spec["t"])
    parity_even = spec["parity"] == "even"
    print("=== %s  t=%s  parity=%s ===" % (label, spec["t"], spec["parity"]))
    t_start = time.time()

    # eigenvalue sanity: the collocation residual must dip at the seed
    m0 = int((0.5 * math.pi * t + 38.0) / (2 * math.pi * 0.35)) + 2
    dip = [phase1_residual(t + d, parity_even, [0.35, 0.41], m0, int(1.6 * m0))
           for d in (-2e-5, 0.0, 2e-5)]
    print("  residual dip: %.3e | %.3e | %.3e  (center must be smallest)"
          % tuple(dip))
    if not (dip[1] < dip[0] and dip[1] < dip[2]):
        raise RuntimeError("eigenvalue seed failed the residual-dip check")

    _, c_small = phase1_residual(t, parity_even, [0.35, 0.41], m0,
                                 int(1.6 * m0), dps=22, want_coeffs=True)
    print("  phase1 coeffs: c2=%.9f c3=%.9f c4=%.9f"
          % (c_small[1], c_small[2], c_small[3]))

    # two sampling heights; x_max near the K turning zone keeps kappa_N sane
    x_max1 = t + 3.0 * t ** (1.0 / 3.0)
    x_max2 = x_max1 - 1.1
    heights = [x_max1 / (2 * math.pi * n_max), x_max2 / (2 * math.pi * n_max)]

    table = ScaledKTable(t, x_lo=2 * math.pi * heights[1] * 0.999)
    werr = table.selfcheck()
    print("  scaledK table selfcheck worst rel err: %.2e" % werr)
    if werr > 5e-13:
        raise RuntimeError("scaledK table accuracy regression")

    m_pull = int((0.5 * math.pi * t + 38.0) / (2 * math.pi * 0.866)) + 1
    lam = np.zeros(max(n_max, m_pull) + 1, dtype=LD)
    lam[1:len(c_small) + 1] = c_small

    # cache pullbacks and the per-height kappa denominators
    cache = []
    js = np.arange(two_q)
    for y0 in heights:
        xj = (js / LD(two_q)).astype(LD)
        xs, ys = pullback(xj.copy(), np.full(two_q, y0, dtype=LD))
        n_arr = np.arange(1, n_max + 1, dtype=LD)
        kap = np.sqrt(LD(y0)) * table.eval_vec(2 * np.pi * n_arr * LD(y0))
        cache.append((xj, xs, ys, kap))

    prev = None
    for it in range(4):
        est = []
        for (xj, xs, ys, kap) in cache:
            ph = phi_eval(table, parity_even, lam[1:m_pull + 1], xs, ys, m_pull)
            spec_fft = sfft.rfft(ph)
            a_n = (spec_fft[1:n_max + 1].real if parity_even
                   else -spec_fft[1:n_max + 1].imag) / (two_q / 2.0)
            est.append((a_n.astype(LD), kap))
        # choose per-n the height with the larger |kappa| (dodges K zeros)
        a1, k1 = est[0]
        a2, k2 = est[1]
        use1 = np.abs(k1) >= np.abs(k2)
        lam_new = np.where(use1, a1 / np.where(use1, k1, 1.0),
                           a2 / np.where(~use1, k2, 1.0))
        lam_new /= lam_new[0]          # hold the lambda(1)=1 normalization
        lam_prev_head = lam[1:m_pull + 1].copy()
        lam[1:n_max + 1] = lam_new
        delta = float(np.max(np.abs(lam[1:m_pull + 1] - lam_prev_head)))
        # two-height agreement where both denominators are healthy
        both = (np.abs(k1) > 0.02) & (np.abs(k2) > 0.02)
        agree = float(np.max(np.abs(a1[both] / k1[both] - a2[both] / k2[both]))) \
            if np.any(both) else float("nan")
        print("  iter %d: head delta %.2e, two-height agreement %.2e"
              % (it + 1, delta, agree))
        if prev is not None and delta < 2e-11:
            break
        prev = delta

    lam_f = np.asarray(lam[1:n_max + 1], dtype=float)
    lam_f = np.concatenate([[0.0], lam_f])      # 1-based view, lam_f[n]

    # Hecke fidelity before enforcement
    worst = 0.0
    worst_at = None
    for m in range(2, 320):
        for n in range(m, n_max // m + 1):
            if math.gcd(m, n) == 1:
                r = abs(lam_f[m] * lam_f[n] - lam_f[m * n])
                if r > worst:
                    worst, worst_at = r, (m, n)
    print("  pre-enforcement multiplicativity residual: %.2e at %s"
          % (worst, worst_at))
    # prime-power relation residual lam(p)lam(p^k) = lam(p^{k+1}) + lam(p^{k-1})
    worst_pp = 0.0
    for p in (2, 3, 5, 7, 11, 13):
        k = 1
        while p ** (k + 1) <= n_max:
            r = abs(lam_f[p] * lam_f[p ** k] - lam_f[p ** (k + 1)]
                    - (lam_f[p ** (k - 1)] if k >= 1 else 0.0))
            worst_pp = max(worst_pp, r)
            k += 1
    print("  prime-power Hecke residual: %.2e" % worst_pp)
    if worst > 3e-7 or worst_pp > 3e-7:
        raise RuntimeError("harvest accuracy insufficient (%s)" % label)

    # enforce multiplicativity: composites from harvested prime powers
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, int(n_max ** 0.5) + 1):
        if spf[p] == 0:
            sl = spf[p * p::p]
            sl[sl == 0] = p
            spf[p * p::p] = sl
    for p in range(2, n_max + 1):
        if spf[p] == 0:
            spf[p] = p

    lam_out = lam_f.copy()
    for n in range(2, n_max + 1):
        p = spf[n]
        pe = p
        m = n // p
        while m % p == 0:
            pe *= p
            m //= p
        if m > 1:
            lam_out[n] = lam_out[pe] * lam_out[m]

    # Ramanujan-type bound check (spec-level bound, and the sharp |.|<=d(n))
    nn = np.arange(1, n_max + 1, dtype=float)
    bound = 2.0 * nn ** (7.0 / 64.0 + 0.01)
    if np.any(np.abs(lam_out[1:]) > bound):
        raise RuntimeError("Ramanujan-type bound violated")
    print("  max |lam(p)| over primes: %.6f"
          % max(abs(lam_out[p]) for p in range(2, n_max + 1) if spf[p] == p))

    src = ("Computed for this project with a two-phase Hejhal-type method "
           "(collocation bootstrap at heights 0.35/0.41, then FFT harvest on "
           "horocycles with 2^%d samples, 80-bit arithmetic, Chebyshev-"
           "tabulated K-Bessel); multiplicativity enforced from harvested "
           "prime powers, pre-enforcement residual %.1e. Spectral parameter "
           "from the classical literature, revalidated by a collocation "
           "residual-dip test." % (int(math.log2(two_q)), worst))
    payload = {
        "label": label,
        "spectral_parameter": spec["t"],
        "parity": spec["parity"],
        "coefficients": ["%.12g" % v for v in lam_out[1:]],
        "source": src,
    }
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, label + ".json")
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=0)
    print("  wrote %s  (%.1f min)" % (path, (time.time() - t_start) / 60.0))
    return lam_out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="small cutoffs for a smoke test")
    ap.add_argument("--out", default=os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "..", "data"))
    ap.add_argument("--only", default=None)
    args = ap.parse_args()
    n_max = 2000 if args.quick else 100000
    two_q = 1 << 14 if args.quick else 1 << 19
    for spec in FORMS:
        if args.only and spec["label"] != args.only:
            continue
        harvest_form(spec, n_max, two_q, args.out)


if __name__ == "__main__":
    main()
