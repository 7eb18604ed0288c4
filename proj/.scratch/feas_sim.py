"""Feasibility sim for criterion 1: two-layer PR search on a 1-D elliptic slice.

e(x) = f(xc) - f(xc|x) where f ~ 4e11 (rest-of-problem offset). Measures the
final w*(x-s)^2 error per variable under two fitness precisions:
  - double:      f quantized to float64 before subtraction
  - longdouble:  f quantized to 80-bit extended before subtraction
"""
import numpy as np

LD = np.longdouble

def make_e(w, s, R, quant):
    # f(xc|x) = R + w*(x-s)^2, f(xc) = R + w*(xc-s)^2 with xc fixed; improvements
    # relative to xc's own term folded into constant C.
    def f(x):
        val = LD(R) + LD(w) * (LD(x) - LD(s)) ** 2
        return quant(val)
    fc = f(83.0)   # context value for this variable
    def e(x):
        return float(fc - f(x))
    return e

def polyfit_scaled(xs, ys, deg):
    xs = np.asarray(xs, float); ys = np.asarray(ys, float)
    lo, hi = xs.min(), xs.max()
    o, sc = (lo + hi) / 2, (hi - lo) / 2
    t = (xs - o) / sc
    c = np.polyfit(t, ys, deg)   # descending, in t
    return c, o, sc

def poly_argmax(c, o, sc, lb, ub):
    # candidates: endpoints + real roots of derivative (in t space)
    tl, tu = (lb - o) / sc, (ub - o) / sc
    d = np.polyder(c)
    cands = [tl, tu]
    if len(d) > 1 and np.any(d[:-1] != 0):
        for r in np.roots(d):
            if abs(r.imag) < 1e-9 and tl <= r.real <= tu:
                cands.append(r.real)
    cands = sorted(cands)
    best_t, best_v = cands[0], np.polyval(c, cands[0])
    for t in cands[1:]:
        v = np.polyval(c, t)
        if v > best_v:
            best_t, best_v = t, v
    return best_t * sc + o, best_v

def solve_1d(e, lb, ub, d_s=100, eps=0.8, r2=15.0, r5=10.0):
    xs = np.linspace(lb, ub, d_s)
    ys = np.array([e(x) for x in xs])
    fes = d_s
    # incumbent = best real-evaluated (max improvement)
    bi = int(np.argmax(ys))
    inc_x, inc_e = xs[bi], ys[bi]
    # FDC on costs = -ys, best = argmin cost
    costs = -ys
    b = int(np.argmin(costs))
    d = np.abs(xs - xs[b])
    if costs.std() == 0 or d.std() == 0:
        fdc = 1.0
    else:
        fdc = float(np.corrcoef(costs, d)[0, 1])
    deg, r = (2, r2) if abs(fdc) > eps else (5, r5)
    c, o, sc = polyfit_scaled(xs, ys, deg)
    xg, _ = poly_argmax(c, o, sc, lb, ub)
    lb2, ub2 = lb / r + xg, ub / r + xg
    lb2, ub2 = max(lb2, lb), min(ub2, ub)
    # layer 2
    inreg = [(x, y) for x, y in zip(xs, ys) if lb2 <= x <= ub2]
    n_new = d_s - len(inreg)
    if n_new > 0:
        nx = np.linspace(lb2, ub2, n_new) if n_new > 1 else np.array([(lb2+ub2)/2])
        ny = np.array([e(x) for x in nx])
        fes += n_new
        j = int(np.argmax(ny))
        if ny[j] > inc_e:
            inc_x, inc_e = nx[j], ny[j]
        pts = np.array([p for p, _ in inreg] + list(nx))
        vals = np.array([v for _, v in inreg] + list(ny))
    else:
        pts = np.array([p for p, _ in inreg]); vals = np.array([v for _, v in inreg])
    K = d_s // 6
    width = (ub2 - lb2) / K
    sub = np.minimum(((pts - lb2) / width).astype(int), K - 1)
    best_pred, best_x = -np.inf, None
    for i in range(K):
        lo_i, hi_i = i, i
        mask = sub == i
        while mask.sum() < 6 and (lo_i > 0 or hi_i < K - 1):
            if lo_i > 0: lo_i -= 1
            mask = (sub >= lo_i) & (sub <= hi_i)
            if mask.sum() >= 6: break
            if hi_i < K - 1: hi_i += 1
            mask = (sub >= lo_i) & (sub <= hi_i)
        if mask.sum() < 6: continue
        c, o, sc = polyfit_scaled(pts[mask], vals[mask], 5)
        xi, vi = poly_argmax(c, o, sc, lb2 + i * width, lb2 + (i + 1) * width)
        if vi > best_pred:
            best_pred, best_x = vi, xi
    if best_x is not None:
        ew = e(best_x); fes += 1
        if ew > inc_e:
            inc_x, inc_e = best_x, ew
    return inc_x, fes

def run(quant, label):
    rng = np.random.default_rng(7)
    R = 4.0e11   # rest-of-problem magnitude
    total = 0.0
    rows = []
    # weights representative of elliptic 10^(6*(i-1)/999): sample strata
    for w_exp in [0, 0.75, 1.5, 2.25, 3, 3.75, 4.5, 5.25, 6]:
        w = 10.0 ** w_exp
        errs = []
        for trial in range(8):
            s = rng.uniform(-80, 80)
            e = make_e(w, s, R, quant)
            x, fes = solve_1d(e, -100.0, 100.0)
            errs.append(w * (x - s) ** 2)
        med = np.median(errs)
        rows.append((w, med))
    # integrate over 1000 vars: weight exponent uniform over [0,6]
    # contribution(w) interpolate in log space
    ws = np.array([r[0] for r in rows]); cs = np.array([max(r[1], 1e-30) for r in rows])
    grid = 10 ** np.linspace(0, 6, 1000)
    ci = np.exp(np.interp(np.log(grid), np.log(ws), np.log(cs)))
    print(f"[{label}] per-weight median w*(dx)^2:")
    for w, m in rows:
        print(f"   w=1e{np.log10(w):.2f}: {m:.3e}")
    print(f"[{label}] estimated D=1000 total f(x*): {ci.sum():.3e}")

q64 = lambda v: np.float64(v)
q80 = lambda v: v  # stays longdouble
run(q64, "double fitness")
run(q80, "longdouble fitness")
