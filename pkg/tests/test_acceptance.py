"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py``.
"""
import time
from fractions import Fraction as F

import numpy as np

from orbithull import (
    SpectralForm,
    SpectrumSet,
    TracialHermitian,
    align,
    averaging_recursion,
    compression_for_dominance,
    convex_test_check,
    eigenvalue_function,
    hull_distance,
    hull_member_normal,
    hull_member_selfadjoint,
    hull_to_hull_distance,
    majorizes,
    nearest_majorized_profile,
    orbit_distance,
    partial_integral,
    realize_mixing_plan,
    reduce_to_target,
    replay,
    singular_value_function,
    spectral_hull_distance,
    submajorization_contraction,
    submajorizes,
    sup_distance,
    two_sided_compression,
    two_sided_orbit_member,
)
from orbithull.oracle import (
    hull_distance_search,
    permutation_matching_distance,
    point_in_hull_exhaustive,
    random_majorized_pair,
)

RESULTS = []


def report(number, title, ok, elapsed, limit, detail=""):
    ok = bool(ok) and elapsed < limit
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s / {limit}s){'  ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def rand_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_form(rng, n, lo=-10, hi=10, denom=None):
    values = [F(int(v)) for v in rng.integers(lo, hi + 1, size=n)]
    if denom is None:
        raw = [int(w) for w in rng.integers(1, 10, size=n)]
    else:
        cuts = sorted(set(int(c) for c in rng.integers(1, denom, size=n - 1)))
        bps = [0] + cuts + [denom]
        raw = [b - a for a, b in zip(bps, bps[1:])]
        values = values[: len(raw)]
    total = sum(raw)
    return SpectralForm([(v, F(w, total)) for v, w in zip(values, raw)])


def uniform_values(form, n):
    out = []
    for v, w in eigenvalue_function(form).pairs():
        out += [float(v)] * round(w * n)
    return out


def test_criterion_01_orbit_distance():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    worst, exact_ok = 0.0, True
    for trial in range(500):
        n = int(rng.integers(2, 8))
        if trial % 5 == 0:
            # integer spectra through the rational backend
            et = [int(v) for v in rng.integers(-9, 10, size=n)]
            es = [int(v) for v in rng.integers(-9, 10, size=n)]
            ft = eigenvalue_function(SpectralForm.uniform([F(v) for v in et]))
            fs = eigenvalue_function(SpectralForm.uniform([F(v) for v in es]))
            exact_ok &= orbit_distance(ft, fs) == permutation_matching_distance(et, es)
            continue
        T, S = rand_hermitian(rng, n), rand_hermitian(rng, n)
        d = orbit_distance(eigenvalue_function(TracialHermitian(T)), eigenvalue_function(TracialHermitian(S)))
        ref = permutation_matching_distance(np.linalg.eigvalsh(T), np.linalg.eigvalsh(S))
        worst = max(worst, abs(d - ref))
    elapsed = time.perf_counter() - start
    report(1, "orbit distance = optimal matching", worst <= 1e-9 and exact_ok, elapsed, 10,
           f"max deviation {worst:.1e}, exact cases {'equal' if exact_ok else 'DIFFER'}")


def test_criterion_02_mixing_plans():
    rng = np.random.default_rng(202)
    start = time.perf_counter()
    worst_err = worst_w = worst_u = 0.0
    for seed in range(200):
        n = int(rng.integers(2, 7))
        t, s = random_majorized_pair(n, seed, uniform=True)
        T = np.diag(uniform_values(t, n))
        S = np.diag(uniform_values(s, n))
        plan = realize_mixing_plan(T, S, eps=1e-9)
        worst_err = max(worst_err, np.linalg.norm(plan.apply(T) - S, 2))
        worst_w = max(worst_w, abs(sum(plan.weights) - 1))
        worst_u = max(worst_u, plan.unitarity_defect() / n)
    # converse: spreading two eigenvalues apart leaves the hull
    rejected = 0
    for seed in range(200):
        n = int(rng.integers(2, 7))
        t, _ = random_majorized_pair(n, 1000 + seed, uniform=True)
        vals = sorted(uniform_values(t, n), reverse=True)
        i, j = sorted(rng.choice(n, size=2, replace=False))
        bump = float(rng.integers(1, 5))
        vals[i] += bump
        vals[j] -= bump
        ft = eigenvalue_function(TracialHermitian(np.diag(uniform_values(t, n))))
        fs = eigenvalue_function(TracialHermitian(np.diag(vals)))
        rejected += hull_distance(ft, fs) > 0
    elapsed = time.perf_counter() - start
    ok = worst_err <= 1e-8 and worst_w <= 1e-12 and worst_u <= 1e-10 and rejected == 200
    report(2, "hull membership via mixing plans", ok, elapsed, 30,
           f"recon {worst_err:.1e}, weight sum {worst_w:.1e}, unitarity {worst_u:.1e}, rejected {rejected}/200")


def test_criterion_03_reduction_algorithm():
    start = time.perf_counter()
    ok, count, worst_ratio = True, 0, 0.0
    seed = 0
    while count < 200:
        seed += 1
        t, s = random_majorized_pair(1 + seed % 8, 3000 + seed)
        a, b = align(t, s)
        if len(a) > 12:
            continue
        count += 1
        steps = reduce_to_target(a, b)
        forms = replay(a, steps, intermediates=True)
        ok &= forms[-1].values == b.values
        lt = eigenvalue_function(a)
        ok &= all(majorizes(lt, eigenvalue_function(f)) for f in forms)
        ok &= len(steps) <= len(a) ** 2
        worst_ratio = max(worst_ratio, len(steps) / len(a) ** 2)
    elapsed = time.perf_counter() - start
    report(3, "reduction algorithm replays exactly", ok, elapsed, 10, f"max steps/blocks^2 {worst_ratio:.2f}")


def test_criterion_04_averaging_recursion():
    rng = np.random.default_rng(404)
    start = time.perf_counter()
    ok, worst, longest = True, 0.0, 0
    for _ in range(500):
        p = float(rng.uniform(0, 0.5)) or 0.5
        a, b = (float(x) for x in rng.uniform(-10, 10, size=2))
        tr = averaging_recursion(p, a, b, max_iter=10_000, tol=1e-9)
        err = abs(tr.limit - tr.expected_limit())
        worst = max(worst, err)
        longest = max(longest, len(tr.steps))
        ok &= err < 1e-6 and len(tr.steps) <= 10_000
        ks = [s.k for s in tr.steps]
        ok &= ks == sorted(ks) and ks[0] >= 2
        ok &= all(s.r < F(1, s.k + 1) for s in tr.steps)
        lo_seq, hi_seq = (tr.a_sequence(), tr.b_sequence()) if a <= b else (tr.b_sequence(), tr.a_sequence())
        ok &= all(x <= y + 1e-12 for x, y in zip(lo_seq, lo_seq[1:]))
        ok &= all(x >= y - 1e-12 for x, y in zip(hi_seq, hi_seq[1:]))
        ok &= lo_seq[-1] <= hi_seq[-1] + 1e-12
    elapsed = time.perf_counter() - start
    report(4, "averaging recursion reaches the trace", ok, elapsed, 5, f"max |a_n - trace| {worst:.1e}, longest run {longest} steps")


def test_criterion_05_hull_distance():
    rng = np.random.default_rng(505)
    start = time.perf_counter()
    ok, worst = True, 0.0
    for _ in range(200):
        t = rand_form(rng, int(rng.integers(1, 6)), denom=int(rng.choice([6, 10, 32, 128])))
        s = rand_form(rng, int(rng.integers(1, 6)), denom=int(rng.choice([7, 12, 64])))
        ft, fs = eigenvalue_function(t), eigenvalue_function(s)
        d = hull_distance(ft, fs)
        ref = hull_distance_search(ft, fs, 128)
        gap = abs(float(d) - ref)
        worst = max(worst, gap)
        ok &= gap <= 2 * float(ft.sup_norm()) / 128 + 1e-9
        h = nearest_majorized_profile(ft, fs)
        ok &= majorizes(ft, h) and sup_distance(h, fs) <= d + F(1, 10**9)
    elapsed = time.perf_counter() - start
    report(5, "hull distance formula vs LP oracle", ok, elapsed, 20, f"max gap {worst:.1e}")


def test_criterion_06_hull_to_hull():
    rng = np.random.default_rng(606)
    start = time.perf_counter()
    ok = True
    for _ in range(500):
        t, s = rand_form(rng, int(rng.integers(1, 7))), rand_form(rng, int(rng.integers(1, 7)))
        expected = abs(partial_integral(eigenvalue_function(s), 1) - partial_integral(eigenvalue_function(t), 1))
        ok &= hull_to_hull_distance(t, s) == expected
    elapsed = time.perf_counter() - start
    report(6, "hull-to-hull distance = trace gap", ok, elapsed, 1)


def test_criterion_07_ramp_equivalence():
    rng = np.random.default_rng(707)
    start = time.perf_counter()
    agree, positives = 0, 0
    for trial in range(500):
        kind = trial % 3
        if kind == 0:
            t, s = random_majorized_pair(int(rng.integers(1, 8)), 7000 + trial)
            shift = -min(t.values)
            t, s = (x.map(lambda v, c=shift: v + c) for x in (t, s))
        else:
            t, s = rand_form(rng, int(rng.integers(1, 7)), lo=0), rand_form(rng, int(rng.integers(1, 7)), lo=0)
            if kind == 1 and s.trace() > 0:
                ratio = t.trace() / s.trace()
                s = s.map(lambda v, r=ratio: v * r)
        grid = sorted(set(t.values) | set(s.values))
        m = majorizes(eigenvalue_function(t), eigenvalue_function(s))
        positives += m
        agree += m == convex_test_check(t, s, grid)
    elapsed = time.perf_counter() - start
    report(7, "majorization = ramp-function test", agree == 500, elapsed, 5,
           f"agreement {agree}/500 ({positives} majorized)")


def test_criterion_08_compressions():
    rng = np.random.default_rng(808)
    start = time.perf_counter()
    dom_ok = sub_ok = True
    n_dom = n_sub = 0
    for _ in range(200):
        t = rand_form(rng, int(rng.integers(1, 7)), lo=0)
        ratios = [F(int(k), 8) for k in rng.integers(0, 9, size=len(t))]
        s = SpectralForm([(v * r, w) for (v, w), r in zip(t.sorted().entries, ratios)])
        # keep only pairs where s stays pointwise below t after re-sorting
        if all(x <= y for x, y in zip(sorted(s.values, reverse=True), t.sorted().values)):
            n_dom += 1
            c = compression_for_dominance(t, s)
            dom_ok &= eigenvalue_function(c.image()) == eigenvalue_function(s)
    for trial in range(200):
        t = rand_form(rng, int(rng.integers(1, 7)), lo=0)
        s = rand_form(rng, int(rng.integers(1, 7)), lo=0)
        lt, ls = eigenvalue_function(t), eigenvalue_function(s)
        if not submajorizes(lt, ls):
            s = t.map(lambda v: v / 2) if trial % 2 else random_majorized_pair(len(t), trial)[1].map(abs)
            ls = eigenvalue_function(s)
            if not submajorizes(lt, ls):
                continue
        n_sub += 1
        a, img = submajorization_contraction(t, s)
        sub_ok &= majorizes(eigenvalue_function(img), ls) and a.norm() <= 1 + 1e-10
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 7))
        t = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        sig = np.linalg.svd(t, compute_uv=False) * rng.uniform(0, 1, size=n)
        s = rand_unitary(rng, n) @ np.diag(sig) @ rand_unitary(rng, n)
        A, B = two_sided_compression(t, s)
        worst = max(worst, np.linalg.norm(A @ t @ B - s, 2) / (1 + np.linalg.norm(t, 2)))
        ok_norms = np.linalg.norm(A, 2) <= 1 + 1e-10 and np.linalg.norm(B, 2) <= 1 + 1e-10
        sub_ok &= ok_norms
    elapsed = time.perf_counter() - start
    report(8, "compressions reconstruct their targets", dom_ok and sub_ok and worst <= 1e-7, elapsed, 20,
           f"dominance {n_dom} cases, submajorization {n_sub} cases, two-sided relative residual {worst:.1e}")


def test_criterion_09_two_sided_orbits():
    rng = np.random.default_rng(909)
    start = time.perf_counter()
    members = rejects = 0
    for _ in range(100):
        n = int(rng.integers(1, 8))
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        u, v = rand_unitary(rng, n), rand_unitary(rng, n)
        members += two_sided_orbit_member(a, u @ a @ v)
        w, sig, xh = np.linalg.svd(a)
        sig = sig.copy()
        sig[int(rng.integers(0, n))] += float(rng.uniform(1e-3, 1.0))
        rejects += not two_sided_orbit_member(a, w @ np.diag(sig) @ xh)
    elapsed = time.perf_counter() - start
    report(9, "two-sided orbit membership", members == 100 and rejects == 100, elapsed, 10,
           f"members {members}/100, perturbed rejected {rejects}/100")


def test_criterion_10_purely_infinite():
    rng = np.random.default_rng(1010)
    start = time.perf_counter()
    agree_sa = agree_n = 0
    for _ in range(1000):
        s = SpectrumSet(list(rng.integers(-20, 21, size=int(rng.integers(1, 6))) / 4))
        t = SpectrumSet(list(rng.integers(-20, 21, size=int(rng.integers(1, 6))) / 4))
        agree_sa += hull_member_selfadjoint(s, t) == (spectral_hull_distance(s, t) == 0)
    for _ in range(500):
        t_pts = [complex(x, y) / 2 for x, y in rng.integers(-6, 7, size=(int(rng.integers(1, 8)), 2))]
        s_pts = [complex(x, y) / 2 for x, y in rng.integers(-6, 7, size=(int(rng.integers(1, 4)), 2))]
        expected = all(point_in_hull_exhaustive(z, t_pts) for z in s_pts)
        agree_n += hull_member_normal(SpectrumSet(s_pts), SpectrumSet(t_pts)) == expected
    elapsed = time.perf_counter() - start
    report(10, "purely infinite membership predicates", agree_sa == 1000 and agree_n == 500, elapsed, 2,
           f"self-adjoint {agree_sa}/1000, normal {agree_n}/500")


def test_criterion_11_spectral_property_suite():
    rng = np.random.default_rng(1111)
    start = time.perf_counter()
    failures = []

    def check(name, cond):
        if not cond:
            failures.append(name)

    def lam(m):
        return eigenvalue_function(TracialHermitian(m))

    def leq_pointwise(f, g, tol):
        from orbithull.stepfn import common_grid, sample_points
        pts = sample_points(common_grid(f, g), False)
        return all(f(x) <= g(x) + tol for x in pts)

    for _ in range(300):
        n = int(rng.integers(1, 9))
        T, S = rand_hermitian(rng, n), rand_hermitian(rng, n)
        u = rand_unitary(rng, n)
        lt = lam(T)
        scale = 1 + np.linalg.norm(T, 2)
        check("unitary invariance", sup_distance(lam(u.conj().T @ T @ u), lt) <= 1e-7)
        alpha = float(rng.uniform(0, 3))
        check("scaling", sup_distance(lam(alpha * T), lt.scale(alpha)) <= 1e-9 * scale * (1 + alpha))
        check("translation", sup_distance(lam(T + alpha * np.eye(n)), lt.shift(alpha)) <= 1e-9 * (scale + alpha))
        check("lipschitz", sup_distance(lt, lam(S)) <= np.linalg.norm(S - T, 2) + 1e-9 * scale)
        check("trace", abs(partial_integral(lt, 1) - np.trace(T).real / n) <= 1e-9 * scale)
        coeffs = rng.normal(size=5)
        poly = np.polynomial.Polynomial(coeffs)
        lhs = np.trace(sum(c * np.linalg.matrix_power(T, k) for k, c in enumerate(coeffs))).real / n
        rhs = sum(float(poly(v)) * float(w) for v, w in lt.pairs())
        check("functional calculus", abs(lhs - rhs) <= 1e-8 * (1 + abs(lhs)) * scale**4)
        g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        check("monotonicity", leq_pointwise(lam(S), lam(S + g @ g.conj().T), 1e-9 * (1 + np.linalg.norm(g, 2) ** 2)))
        P = g @ g.conj().T
        V = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        vn = np.linalg.norm(V, 2)
        check("compression bound", leq_pointwise(lam(V.conj().T @ P @ V), lam(P).scale(vn**2), 1e-8 * vn**2 * np.linalg.norm(P, 2)))
        X = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        mx = singular_value_function(X)
        absx = np.real(np.linalg.svd(X, compute_uv=False))
        ax = u @ np.diag(absx) @ u.conj().T
        check("mu of adjoint", sup_distance(mx, singular_value_function(X.conj().T)) <= 1e-9 * (1 + absx[0]))
        w_, s_, vh_ = np.linalg.svd(X)
        modulus = vh_.conj().T @ np.diag(s_) @ vh_
        check("mu of modulus", sup_distance(mx, singular_value_function(modulus)) <= 1e-9 * (1 + absx[0]))
        check("mu unitary invariance", sup_distance(singular_value_function(ax), mx) <= 1e-8 * (1 + absx[0]))
        R, Q = rng.normal(size=(n, n)), rng.normal(size=(n, n))
        bound = np.linalg.norm(R, 2) * np.linalg.norm(Q, 2)
        check("mu of product", leq_pointwise(singular_value_function(R @ X @ Q), mx.scale(bound), 1e-8 * bound * (1 + absx[0])))
        a, b = rand_form(rng, int(rng.integers(1, 7))), rand_form(rng, int(rng.integers(1, 7)))
        a2, b2 = align(a, b)
        check("align exact", eigenvalue_function(a2) == eigenvalue_function(a) and eigenvalue_function(b2) == eigenvalue_function(b))
    elapsed = time.perf_counter() - start
    report(11, "eigenvalue/singular value function properties", not failures, elapsed, 30,
           f"{len(failures)} failures" + (f": {sorted(set(failures))}" if failures else ""))


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
