"""Constructive membership certificates.

* :func:`pinch` and :func:`reduce_to_target` turn a source spectral form into
  any form it majorizes through a finite chain of two-block averagings.
* :func:`realize_mixing_plan` does the same at matrix level, returning
  explicit convex weights and unitaries.
* :func:`averaging_recursion` runs the alternating division-algorithm
  averaging that drives a two-point element onto its trace.
* The contraction builders handle pointwise dominance, submajorization and
  the two-sided ``A t B`` problem.
"""
import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._numeric import (
    TOL,
    WEIGHT_TOL,
    DomainError,
    PreconditionError,
    ValidationError,
    all_exact,
    close,
    to_json_number,
)
from .majorize import dominates_pointwise, majorizes, submajorizes
from .spectral import SpectralForm, TracialHermitian, align, eigenvalue_function, singular_value_function
from .stepfn import sup_distance


# ---------------------------------------------------------------------------
# pinching and the reduction algorithm


@dataclass(frozen=True)
class TTransformStep:
    """Two-block averaging of blocks ``block_i`` and ``block_j``.

    ``mix`` is the pinching parameter: each value moves to
    ``mix * value + (1 - mix) * mean``.  ``value_i``/``value_j`` record the
    results.
    """

    block_i: int
    block_j: int
    mix: object
    value_i: object
    value_j: object


def pinch(a_value, b_value, w_a, w_b, t):
    """Pinch a two-point element ``a P + b (1 - P)`` towards its trace.

    Returns ``(a t + m (1 - t), b t + m (1 - t))`` where ``m`` is the
    weighted mean; the weighted sum is preserved.
    """
    if not 0 <= t <= 1:
        raise DomainError(f"pinching parameter must lie in [0, 1]; got {t!r}")
    if not (w_a > 0 and w_b > 0):
        raise DomainError("block weights must be positive")
    m = (a_value * w_a + b_value * w_b) / (w_a + w_b)
    return a_value * t + m * (1 - t), b_value * t + m * (1 - t)


def _same_weights(a, b):
    if len(a) != len(b):
        return False
    exact = a.exact and b.exact
    return all((x == y) if exact else abs(x - y) <= WEIGHT_TOL for x, y in zip(a.weights, b.weights))


def _is_sorted(values, slack=0):
    return all(y <= x + slack for x, y in zip(values, values[1:]))


def reduce_to_target(t_form, s_form):
    """Pinching steps carrying ``t_form`` onto ``s_form``.

    Both forms must share one weight sequence with values sorted
    non-increasingly (the output of :func:`align`), and ``s ≺ t``.  Blocks are
    fixed left to right: block ``i`` is averaged against the first later
    block whose value falls below the target ``s_i``; if full averaging
    still leaves block ``i`` above target, the next such block is used.
    """
    if not _same_weights(t_form, s_form):
        raise PreconditionError("forms are not aligned (weight sequences differ); call align() first")
    exact = t_form.exact and s_form.exact
    scale = 1 + max(abs(v) for v in t_form.values + s_form.values)
    slack = 0 if exact else TOL * scale
    if not (_is_sorted(t_form.values, slack) and _is_sorted(s_form.values, slack)):
        raise PreconditionError("aligned forms must list values in non-increasing order")
    if not majorizes(eigenvalue_function(t_form), eigenvalue_function(s_form)):
        raise DomainError("target is not majorized by the source; no pinching sequence exists")

    alpha = list(t_form.values)
    beta = list(s_form.values)
    w = list(t_form.weights)
    n = len(alpha)
    steps = []
    for i in range(n):
        target = beta[i]
        while True:
            if close(alpha[i], target, slack):
                alpha[i] = target
                break
            if alpha[i] < target:
                raise AssertionError(f"block {i} fell below its target; majorization bookkeeping broken")
            j = next((k for k in range(i + 1, n) if alpha[k] < target - slack), None)
            if j is None:
                if exact:
                    raise AssertionError("no block below target although traces agree")
                alpha[i] = target
                break
            m = (alpha[i] * w[i] + alpha[j] * w[j]) / (w[i] + w[j])
            if m <= target:
                mix = (target - m) / (alpha[i] - m)
                new_i, new_j = target, alpha[j] * mix + m * (1 - mix)
            else:
                mix = 0 if exact else 0.0
                new_i = new_j = m
            alpha[i], alpha[j] = new_i, new_j
            steps.append(TTransformStep(i, j, mix, new_i, new_j))
            if new_i == target:
                break
    return steps


def replay(t_form, steps, intermediates=False):
    """Apply pinching steps to ``t_form``.

    With ``intermediates=True`` the list of forms after each step is
    returned, starting with ``t_form`` itself.
    """
    vals = list(t_form.values)
    w = list(t_form.weights)
    forms = [t_form]
    for st in steps:
        vals[st.block_i], vals[st.block_j] = pinch(vals[st.block_i], vals[st.block_j], w[st.block_i], w[st.block_j], st.mix)
        if intermediates:
            forms.append(SpectralForm(list(zip(vals, w))))
    final = SpectralForm(list(zip(vals, w)))
    return forms if intermediates else final


# ---------------------------------------------------------------------------
# matrix-level mixing plans


@dataclass
class MixingPlan:
    """Convex weights ``t_k`` and unitaries ``U_k`` with ``S = sum t_k U_k* T U_k``."""

    weights: list
    unitaries: list
    base_dim: int

    def apply(self, T):
        m = T.matrix if isinstance(T, TracialHermitian) else np.asarray(T, dtype=complex)
        out = np.zeros_like(m, dtype=complex)
        for wt, u in zip(self.weights, self.unitaries):
            out += wt * (u.conj().T @ m @ u)
        return out

    def unitarity_defect(self):
        eye = np.eye(self.base_dim)
        return max(np.linalg.norm(u.conj().T @ u - eye, 2) for u in self.unitaries)

    def __len__(self):
        return len(self.weights)

    def to_json(self):
        return {
            "weights": [float(w) for w in self.weights],
            "unitaries": [{"re": u.real.tolist(), "im": u.imag.tolist()} for u in self.unitaries],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            weights = [float(w) for w in obj["weights"]]
            unitaries = [np.asarray(u["re"], float) + 1j * np.asarray(u.get("im", 0.0), float)
                         for u in obj["unitaries"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"bad mixing plan JSON: {e}") from None
        if len(weights) != len(unitaries) or not unitaries:
            raise ValidationError("mixing plan needs one unitary per weight")
        return cls(weights, unitaries, unitaries[0].shape[0])


def t_transform_chain(x, y, tol):
    """Elementary T-transforms carrying sorted ``x`` to sorted ``y`` (``y ≺ x``).

    Each entry is ``(lam, j, k)`` meaning ``x <- lam x + (1 - lam) P_jk x``.
    Every step makes at least one more coordinate agree, so at most ``n - 1``
    steps are produced.
    """
    cur = np.array(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = len(cur)
    chain = []
    for _ in range(2 * n):
        over = np.nonzero(cur > y + tol)[0]
        if len(over) == 0:
            break
        j = over[-1]
        under = [k for k in range(j + 1, n) if cur[k] < y[k] - tol]
        if not under:
            break
        k = under[0]
        delta = min(cur[j] - y[j], y[k] - cur[k])
        lam = 1.0 - delta / (cur[j] - cur[k])
        cj, ck = cur[j], cur[k]
        cur[j] = lam * cj + (1 - lam) * ck
        cur[k] = lam * ck + (1 - lam) * cj
        chain.append((lam, int(j), int(k)))
    return chain


def _expand_chain(x, chain):
    """Expand a product of T-transforms into weighted permutations.

    Terms whose permuted spectra coincide give the same conjugate of a
    diagonal matrix, so they are merged.
    """
    n = len(x)
    terms = {tuple(np.round(x, 12)): [1.0, np.arange(n)]}
    for lam, j, k in chain:
        sigma = np.arange(n)
        sigma[j], sigma[k] = k, j
        new = {}
        for wt, perm in terms.values():
            for coef, p in ((lam, perm), (1 - lam, perm[sigma])):
                if coef <= 0:
                    continue
                key = tuple(np.round(x[p], 12))
                if key in new:
                    new[key][0] += wt * coef
                else:
                    new[key] = [wt * coef, p]
        terms = new
    return [(wt, perm) for wt, perm in terms.values()]


def realize_mixing_plan(T, S, eps=1e-9):
    """Explicit ``sum_k t_k U_k* T U_k`` within ``eps`` (operator norm) of ``S``."""
    T = T if isinstance(T, TracialHermitian) else TracialHermitian(T)
    S = S if isinstance(S, TracialHermitian) else TracialHermitian(S)
    if T.dim != S.dim:
        raise ValidationError(f"dimension mismatch: {T.dim} vs {S.dim}")
    n = T.dim
    norm_t = np.linalg.norm(T.matrix, 2)
    lam_t, lam_s = eigenvalue_function(T), eigenvalue_function(S)
    if not majorizes(lam_t, lam_s, slack=max(eps, TOL * (1 + norm_t))):
        raise DomainError("S is not majorized by T, so it is not in the closed convex hull of the unitary orbit")

    wt, vt = np.linalg.eigh(T.matrix)
    ws, vs = np.linalg.eigh(S.matrix)
    x, V = wt[::-1], vt[:, ::-1]
    y, W = ws[::-1], vs[:, ::-1]
    # keep the trace exactly where T puts it so the chain can close
    y = y + (x.sum() - y.sum()) / n

    chain = t_transform_chain(x, y, tol=min(eps, 1e-12 * (1 + norm_t)) / 4)
    terms = _expand_chain(x, chain)

    def build(ts):
        total = sum(w for w, _ in ts)
        weights = [w / total for w, _ in ts]
        unitaries = []
        for _, perm in ts:
            Q = np.zeros((n, n))
            Q[np.arange(n), perm] = 1.0
            unitaries.append(V @ Q.T @ W.conj().T)
        return MixingPlan(weights, unitaries, n)

    def error(plan):
        return np.linalg.norm(plan.apply(T) - S.matrix, 2)

    full = build(terms)
    cutoff = eps / (4 * n * norm_t) if norm_t > 0 else 0.0
    kept = [(w, p) for w, p in terms if w >= cutoff]
    plan = full
    if kept and len(kept) < len(terms):
        pruned = build(kept)
        if error(pruned) <= eps:
            plan = pruned
    err = error(plan)
    if err > eps:
        raise DomainError(f"mixing plan reconstruction error {err:.3e} exceeds eps={eps:.3e}")
    return plan


# ---------------------------------------------------------------------------
# the alternating averaging recursion


@dataclass(frozen=True)
class RecursionStep:
    n: int
    k: int
    r: Fraction
    a: object
    b: object


@dataclass
class RecursionTrace:
    """Division-algorithm averaging run.

    Step ``n`` writes ``1 = k_n r_{n-1} + r_n`` (``r_0`` is the weight of the
    projection carrying ``a``).  Odd steps update the ``a`` coefficient,
    even steps the ``b`` coefficient.
    """

    p_weight: Fraction
    a: object
    b: object
    mode: str
    steps: list = field(default_factory=list)
    limit: object = None
    stop_reason: str = ""

    def a_sequence(self):
        return [self.a] + [s.a for s in self.steps if s.n % 2 == 1]

    def b_sequence(self):
        return [self.b] + [s.b for s in self.steps if s.n % 2 == 0]

    def expected_limit(self):
        p = self.p_weight
        return self.a * p + self.b * (1 - p)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k_n", "r_n", "a_n", "b_n"])
        for s in self.steps:
            w.writerow([s.n, s.k, f"{float(s.r):.17g}", f"{float(s.a):.17g}", f"{float(s.b):.17g}"])
        return buf.getvalue()


def _as_fraction(p):
    if isinstance(p, float):
        # the decimal the caller wrote, not the binary neighbour
        return Fraction(repr(p))
    return Fraction(p)


def averaging_recursion(p_weight, a, b, max_iter=10_000, tol=1e-12, mode="strong"):
    """Drive ``a P + b (1 - P)`` with ``trace(P) = p_weight`` to its trace.

    Each step averages the projection carrying the older value with ``k - 1``
    equivalent copies of it, where ``1 = k r_{n-1} + r_n``.  In
    ``mode="strict"`` a step whose remainder would be exactly zero (the
    weight is ``1/k``) averages over ``k - 1`` copies instead and keeps the
    remainder ``1/k``, so the run converges geometrically rather than
    terminating; this needs ``k >= 3``.  Remainders are exact rationals, so
    exact termination is detected without tolerance.  Integer or rational
    ``a``, ``b`` keep the whole trace exact.
    """
    if mode not in ("strong", "strict"):
        raise ValidationError(f"unknown recursion mode {mode!r}")
    if max_iter < 1:
        raise ValidationError("max_iter must be at least 1")
    p = _as_fraction(p_weight)
    if not 0 < p <= Fraction(1, 2):
        raise DomainError(f"p_weight must lie in (0, 1/2]; got {p_weight!r}")
    if all_exact([a, b]):
        a, b = Fraction(a), Fraction(b)
    trace = RecursionTrace(p, a, b, mode)
    cur_a, cur_b = a, b
    if cur_a == cur_b:
        trace.limit = cur_a
        trace.stop_reason = "equal"
        return trace
    r_prev = p
    for n in range(1, max_iter + 1):
        k = math.floor(1 / r_prev)
        size, r = k, 1 - k * r_prev
        if r == 0 and mode == "strict":
            if k < 3:
                raise DomainError("strict mode cannot average a weight-1/2 projection against its complement")
            size, r = k - 1, r_prev
        if n % 2 == 1:
            cur_a = (cur_a + (size - 1) * cur_b) / size
            latest = cur_a
        else:
            cur_b = (cur_b + (size - 1) * cur_a) / size
            latest = cur_b
        trace.steps.append(RecursionStep(n, k, r, cur_a, cur_b))
        if r == 0:
            trace.stop_reason = "exact"
            break
        if abs(cur_a - cur_b) <= tol:
            trace.stop_reason = "converged"
            break
        r_prev = r
    else:
        trace.stop_reason = "max_iter"
    trace.limit = latest
    return trace


# ---------------------------------------------------------------------------
# contractions


@dataclass(frozen=True)
class Contraction:
    """Block-diagonal contraction ``A = sum_k gamma_k P_k`` acting on ``base``.

    ``gains`` stores ``gamma_k ** 2`` so that ``A* T A`` is computed exactly
    for rational data; ``coefficients`` gives the ``gamma_k`` themselves.
    """

    gains: tuple
    base: SpectralForm
    q: object = None
    k_prime: int = None

    @property
    def coefficients(self):
        return tuple(math.sqrt(g) for g in self.gains)

    def norm(self):
        return max(self.coefficients)

    def image(self):
        """Spectral form of ``A* T A``."""
        return SpectralForm([(g * v, w) for g, (v, w) in zip(self.gains, self.base.entries)])

    def to_json(self):
        out = {
            "coefficients": [float(c) for c in self.coefficients],
            "gains": [to_json_number(g) for g in self.gains],
            "base": self.base.to_json(),
        }
        if self.q is not None:
            out["q"] = to_json_number(self.q)
            out["k_prime"] = self.k_prime
        return out


def _check_positive(form, name):
    floor = 0 if form.exact else -TOL
    if any(v < floor for v in form.values):
        raise DomainError(f"{name} must be positive (all spectral values >= 0)")


def submajorization_contraction(t_form, s_form):
    """Contraction ``A`` with ``s ≺ A* t A`` for positive ``s ≺_w t``.

    ``t`` is first split onto the common weight grid of ``t`` and ``s``.
    ``A`` is the identity on the leading blocks, ``sqrt(q)`` on the block
    ``k'`` where the running integral of ``t`` crosses the total of ``s``,
    and zero after it.  Without the split a single wide block of ``t``
    could not be cut where the crossing happens.  Returns
    ``(A, spectral form of A* t A)``.
    """
    _check_positive(t_form, "t")
    _check_positive(s_form, "s")
    if not submajorizes(eigenvalue_function(t_form), eigenvalue_function(s_form)):
        raise DomainError("s is not submajorized by t")
    base, _ = align(t_form, s_form)
    exact = base.exact and s_form.exact
    slack = 0 if exact else TOL * (1 + max(base.values))
    total = s_form.trace()
    cum = [0]
    for v, w in base.entries:
        cum.append(cum[-1] + v * w)
    kp = max(k for k in range(1, len(base) + 1) if cum[k - 1] <= total + slack)
    block = cum[kp] - cum[kp - 1]
    if block > 0:
        q = (total - cum[kp - 1]) / block
        if not exact:
            q = min(max(q, 0.0), 1.0)
    else:
        q = 1
    one, zero = (1, 0) if exact else (1.0, 0.0)
    gains = [one] * (kp - 1) + [q] + [zero] * (len(base) - kp)
    a = Contraction(tuple(gains), base, q=q, k_prime=kp)
    return a, a.image()


def compression_for_dominance(t_form, s_form):
    """Contraction with ``A* t A = s`` blockwise, for positive ``s`` dominated by ``t``.

    The forms are aligned first; on each block ``gamma_k**2 = beta_k / alpha_k``
    (zero when ``beta_k = 0``).
    """
    _check_positive(t_form, "t")
    _check_positive(s_form, "s")
    if not dominates_pointwise(eigenvalue_function(t_form), eigenvalue_function(s_form)):
        raise DomainError("eigenvalue function of s is not dominated by that of t")
    at, as_ = align(t_form, s_form)
    exact = at.exact and as_.exact
    gains = []
    for alpha, beta in zip(at.values, as_.values):
        if beta == 0 or (not exact and abs(beta) <= TOL):
            gains.append(0 if exact else 0.0)
            continue
        assert alpha > 0, "dominance forces alpha_k > 0 wherever beta_k > 0"
        g = beta / alpha
        gains.append(g if exact else min(g, 1.0))
    return Contraction(tuple(gains), at)


def submajorization_plan(t_form, s_form):
    """Contraction followed by pinching steps that carry ``t`` onto ``s``.

    The steps act on ``align(A* t A, s)[0]``; see :func:`replay_submajorization`.
    """
    a, image = submajorization_contraction(t_form, s_form)
    start, target = align(image, s_form)
    return a, reduce_to_target(start, target)


def replay_submajorization(contraction, steps, s_form):
    start, _ = align(contraction.image(), s_form)
    return replay(start, steps)


# ---------------------------------------------------------------------------
# two-sided problems


def _square(m, name):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"{name} must be a square matrix, got shape {m.shape}")
    return m


def two_sided_orbit_member(a, b, tol=1e-7):
    """Is ``b`` in the closed two-sided unitary orbit ``{U a V}`` of ``a``?"""
    a, b = _square(a, "a"), _square(b, "b")
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return sup_distance(singular_value_function(a), singular_value_function(b)) <= tol


def two_sided_compression(t, s):
    """Contractions ``A, B`` with ``A t B = s`` when ``mu_s <= mu_t`` pointwise."""
    t, s = _square(t, "t"), _square(s, "s")
    if t.shape != s.shape:
        raise ValidationError(f"dimension mismatch: {t.shape} vs {s.shape}")
    if not dominates_pointwise(singular_value_function(t), singular_value_function(s)):
        raise DomainError("singular value function of s is not dominated by that of t")
    U, sig_s, Vh = np.linalg.svd(s)
    W, sig_t, Xh = np.linalg.svd(t)
    floor = TOL * (1 + sig_t[0]) if len(sig_t) else 0.0
    ratio = np.where(sig_t > floor, sig_s / np.where(sig_t > floor, sig_t, 1.0), 0.0)
    ratio = np.minimum(ratio, 1.0)
    A = U @ np.diag(ratio) @ W.conj().T
    B = Xh.conj().T @ Vh
    return A, B
