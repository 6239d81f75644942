"""Executable checks of the vertex-operator and k-Schur identities.

Operator identities are decided on spanning sets: two operators agree on
all functions of degree <= D iff they agree on ``1`` and every ``H_sigma``
with ``|sigma| <= D``.  Each check returns a :class:`VerifyReport`; a
failing report carries the input on which the two sides differ.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from . import kspace, oracles
from .kspace import (
    NotInSpace,
    expand_in_G,
    g_poly,
    g_table,
    k_schur,
    kschur_table,
    lambda_ak_membership,
    omega_membership,
    project_T,
    reconstruct,
    rectangle_exponent,
    reduce_to_irreducible,
)
from .partitions import (
    Partition,
    add,
    conjugate,
    contained_rectangles,
    delta,
    distinct_permutations,
    enumerate_k_irreducibles,
    is_k_irreducible,
    k_bounded_partitions,
    k_rectangles,
    k_split,
    main_hook,
    pad,
    partitions_list,
    partitions_upto,
    rectangle,
    reverse,
    strip,
    to_partition,
    union,
)
from .report import VerifyReport
from .schur import (
    eval_in_vars,
    eval_schur,
    hook_plethysm,
    inverse_kostka_entry,
    kostka,
    kostka_matrix,
    multiply,
    schur_product,
    schur_vector,
    straighten,
    to_schur,
)
from .symfunc import SymFunc, Terms, add_into
from .tpoly import ONE, TPoly
from .vertex import apply_B_int, apply_B_vector, hall_littlewood, hl_test_set

Op = Callable[[SymFunc], SymFunc]


@dataclass(frozen=True)
class Budget:
    """Size caps for a sweep.

    ``max_degree`` bounds the degree of the operator indices (and of the
    partitions being swept); ``test_degree`` bounds the spanning test set.
    """

    max_degree: int = 8
    test_degree: int = 4


# ---------------------------------------------------------------------------
# helpers


def _js(x):
    if isinstance(x, tuple):
        return [_js(y) for y in x]
    if isinstance(x, list):
        return [_js(y) for y in x]
    return x


def _params(**kw) -> dict:
    return {k: _js(v) for k, v in kw.items()}


def _sign_t(n: int) -> TPoly:
    """``(-t)**n``."""
    return TPoly.monomial(n, -1 if n & 1 else 1)


def op_B(v) -> Op:
    v = tuple(v)
    return lambda f: apply_B_vector(v, f)


def op_seq(*ops: Op) -> Op:
    def run(f):
        for op in reversed(ops):
            f = op(f)
        return f

    return run


def op_sum(terms: list[tuple[TPoly, Op]]) -> Op:
    def run(f):
        acc: Terms = {}
        for c, op in terms:
            if c:
                add_into(acc, op(f).terms, c)
        return SymFunc.wrap(acc)

    return run


def first_mismatch(lhs: Op, rhs: Op, inputs: Iterable[SymFunc]) -> dict | None:
    for f in inputs:
        a, b = lhs(f), rhs(f)
        if a != b:
            return {"input": f.to_json(), "lhs": a.to_json(), "rhs": b.to_json()}
    return None


def _timed(fn):
    def wrapper(*args, **kwargs) -> VerifyReport:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.millis = (time.perf_counter() - t0) * 1000.0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# Registry of operator identities: id -> builder(params) -> (lhs, rhs).
# Used to re-run a failing witness on its own.
OPERATOR_IDENTITIES: dict[str, Callable[[dict], tuple[Op, Op]]] = {}


def _register(name: str):
    def deco(builder):
        OPERATOR_IDENTITIES[name] = builder
        return builder

    return deco


def operator_report(ident: str, params: dict, inputs: Iterable[SymFunc]) -> VerifyReport:
    lhs, rhs = OPERATOR_IDENTITIES[ident](params)
    witness = first_mismatch(lhs, rhs, inputs)
    return VerifyReport(ident, params, witness is None, witness)


def recheck(report: VerifyReport) -> bool:
    """Re-evaluate a failing operator report on its witness; True if it still fails."""
    if report.witness is None or report.id not in OPERATOR_IDENTITIES or "input" not in report.witness:
        raise ValueError("only failing operator-identity reports can be rechecked")
    lhs, rhs = OPERATOR_IDENTITIES[report.id](report.params)
    f = SymFunc.from_json(report.witness["input"])
    return lhs(f) != rhs(f)


# ---------------------------------------------------------------------------
# E-sets


def e_vectors(m: int, d: int) -> list[tuple[int, ...]]:
    """0/1 vectors of length ``m`` with ``d`` ones."""
    out = []
    for S in combinations(range(m), d):
        v = [0] * m
        for i in S:
            v[i] = 1
        out.append(tuple(v))
    return out


def e_set(m: int, spec: Iterable[int]) -> Counter:
    """Sums ``v_1 + v_2 + ...`` with ``v_i`` having ``spec[i]`` ones, with multiplicity."""
    acc: Counter = Counter({(0,) * m: 1})
    for d in spec:
        nxt: Counter = Counter()
        vecs = e_vectors(m, d)
        for base, c in acc.items():
            for v in vecs:
                nxt[tuple(a + b for a, b in zip(base, v))] += c
        acc = nxt
    return acc


# ---------------------------------------------------------------------------
# commutation relation and reordering


@_register("commutation")
def _commutation(p):
    m, n = p["m"], p["n"]
    lhs = op_seq(op_B((m,)), op_B((n,)))
    rhs = op_sum([
        (TPoly((0, 1)), op_seq(op_B((n,)), op_B((m,)))),
        (TPoly((0, 1)), op_seq(op_B((m + 1,)), op_B((n - 1,)))),
        (-ONE, op_seq(op_B((n - 1,)), op_B((m + 1,)))),
    ])
    return lhs, rhs


def check_commutation(m: int, n: int, test_set: list[SymFunc]) -> VerifyReport:
    return operator_report("commutation", _params(m=m, n=n), test_set)


@_register("reordering")
def _reordering(p):
    v = tuple(p["v"])
    st = straighten(v)
    if st is None:
        return op_B(v), (lambda f: SymFunc.zero())
    return op_B(v), (lambda f: apply_B_vector(st.parts, f).scale(st.sign))


@_register("lemmax2")
def _lemmax2(p):
    return op_B(tuple(p["mu"]) + tuple(p["nu"])), (lambda f: SymFunc.zero())


# ---------------------------------------------------------------------------
# Theorem: product of a rectangle operator with B_nu


def theorem1_terms(a: int, r: int, m: int, nu: Partition):
    """Summands ``(mu, first index, second index)`` of the expansion.

    A second index with negative entries is kept: whether the summand
    vanishes is decided by straightening, not by dropping it outright.
    """
    out = []
    for mu in partitions_upto(r * m, max_len=r, max_part=m):
        w = tuple(a - x for x in reverse(conjugate(mu), m))
        out.append((mu, tuple(a + x for x in pad(mu, r)), w + tuple(nu)))
    return out


@_register("theorem1")
def _theorem1(p):
    a, r, m, nu = p["a"], p["r"], p["m"], tuple(p["nu"])
    lhs = op_seq(op_B((a,) * (r + m)), op_B(nu))
    rhs = op_sum([(_sign_t(sum(mu)), op_seq(op_B(i1), op_B(i2))) for mu, i1, i2 in theorem1_terms(a, r, m, nu)])
    return lhs, rhs


@_timed
def verify_theorem1(a: int, r: int, m: int, nu: Partition, D: int) -> VerifyReport:
    nu = strip(tuple(nu))
    if len(nu) > r:
        raise ValueError("need len(nu) <= r")
    return operator_report("theorem1", _params(a=a, r=r, m=m, nu=nu, D=D), hl_test_set(D))


def schur_vector_product(*indices) -> SymFunc:
    f = SymFunc.one()
    for v in indices:
        f = multiply(f, schur_vector(v))
    return f


@_timed
def verify_corollary1(a: int, r: int, m: int, nu: Partition) -> VerifyReport:
    """The ``t = 1`` Schur-function form of the rectangle product expansion."""
    nu = strip(tuple(nu))
    lhs = schur_vector_product((a,) * (r + m), nu)
    rhs = SymFunc.zero()
    for mu, i1, i2 in theorem1_terms(a, r, m, nu):
        sgn = -1 if sum(mu) & 1 else 1
        rhs = rhs + schur_vector_product(i1, i2).scale(sgn)
    ok = lhs == rhs
    params = _params(a=a, r=r, m=m, nu=nu)
    return VerifyReport("corollary1", params, ok, None if ok else {"lhs": lhs.to_json(), "rhs": rhs.to_json()})


def theorem1_instances(max_degree: int, max_rows: int = 4) -> Iterator[tuple[int, int, int, Partition]]:
    for rm in range(1, max_rows + 1):
        for r in range(rm + 1):
            m = rm - r
            for a in range(max_degree + 1):
                if a * rm > max_degree:
                    break
                for nu in partitions_upto(max_degree - a * rm, max_len=r):
                    yield a, r, m, nu


# ---------------------------------------------------------------------------
# identities for rectangle operators


@_register("identity1")
def _identity1(p):
    k, l, i = p["k"], p["l"], p["i"]
    R = (l,) * (k + 1 - l)
    lhs = op_seq(op_B(R), op_B((i,)))
    rhs = op_sum([(TPoly.monomial(i - l), op_seq(op_B((i,)), op_B(R)))])
    return lhs, rhs


@_timed
def verify_identity_rect_commute(k: int, l: int, i: int, D: int = 4) -> VerifyReport:
    if not (l <= i <= k):
        raise ValueError("need l <= i <= k")
    return operator_report("identity1", _params(k=k, l=l, i=i, D=D), hl_test_set(D))


@_register("identity3")
def _identity3(p):
    k, l, nu = p["k"], p["l"], tuple(p["nu"])
    R = (l,) * (k + 1 - l)
    lhs = op_seq(op_B(R), op_B(nu))
    rhs = op_sum([(TPoly.monomial(sum(nu) - len(nu) * l), op_seq(op_B(nu), op_B(R)))])
    return lhs, rhs


def rect_nu_terms(k: int, l: int, nu: Partition):
    """Summands of ``B_rect B_nu`` that survive once the widest-column condition is imposed."""
    rows, width = k + 1 - nu[0], nu[0] - l
    out = []
    for mu in partitions_upto(rows * width, max_len=rows, max_part=width):
        if width and (not mu or mu[0] != width):
            continue
        w = tuple(l - x for x in reverse(conjugate(mu), width))
        rho = add(rectangle(l, rows), pad(mu, rows))
        out.append((mu, rho, w + tuple(nu)))
    return out


@_register("rect-nu-expansion")
@_register("identity2")
@_register("identity4")
def _rect_nu(p):
    k, l, nu = p["k"], p["l"], tuple(p["nu"])
    R = (l,) * (k + 1 - l)
    lhs = op_seq(op_B(R), op_B(nu))
    rhs = op_sum([(_sign_t(sum(mu)), op_seq(op_B(rho), op_B(w))) for mu, rho, w in rect_nu_terms(k, l, nu)])
    return lhs, rhs


def identity_preconditions(k: int, l: int, nu: Partition, variant: str) -> bool:
    if not nu or l < 1 or l > k:
        return False
    hm = main_hook(nu)
    if variant == "I4":
        return hm <= k and nu[0] >= l
    if variant == "I2":
        return hm == k and nu[0] >= l > nu[-1]
    if variant == "I3":
        return hm == k and nu[-1] >= l
    raise ValueError(f"unknown variant {variant!r}")


@_timed
def verify_identity_structured(k: int, l: int, nu: Partition, variant: str, D: int = 4) -> VerifyReport:
    nu = strip(tuple(nu))
    if not identity_preconditions(k, l, nu, variant):
        raise ValueError(f"{variant} preconditions fail for k={k}, l={l}, nu={nu}")
    params = _params(k=k, l=l, nu=nu, D=D)
    tests = hl_test_set(D)
    if variant == "I3":
        return operator_report("identity3", params, tests)
    rep = operator_report("identity2" if variant == "I2" else "identity4", params, tests)
    if not rep.passed:
        return rep
    problems = []
    hm_nu = main_hook(nu)
    for mu, rho, w in rect_nu_terms(k, l, nu):
        st = straighten(w)
        if st is None:
            continue
        gamma = st.parts
        conds = {
            "rho_1 = nu_1": rho[0] == nu[0],
            "rho_L >= l": rho[-1] >= l,
            "h(rho) = k": main_hook(rho) == k,
            "gamma is a partition": gamma[-1] >= 0,
            "gamma_1 = l": gamma[0] == l,
        }
        # gamma keeps its zero parts, so its main hook counts all of them
        hg = gamma[0] + len(gamma) - 1
        if variant == "I4":
            conds["h(gamma) <= k"] = hg <= k
            conds["h(gamma) = k only if h(nu) = k"] = hg != k or hm_nu == k
        else:
            conds["h(gamma) = k"] = hg == k
            conds["gamma_L = nu_r"] = gamma[-1] == nu[-1]
        bad = [name for name, ok in conds.items() if not ok]
        if bad:
            problems.append({"mu": list(mu), "rho": list(rho), "gamma": list(gamma), "failed": bad})
    rep.params = dict(params, surviving_terms=sum(1 for _, _, w in rect_nu_terms(k, l, nu) if straighten(w)))
    if problems:
        rep.passed = False
        rep.witness = {"structure": problems}
    return rep


# ---------------------------------------------------------------------------
# Kostka lemmas (formal straightening classes and operator form)


def _classes(terms: Iterable[tuple[int, tuple[int, ...]]]) -> dict:
    """Reduce signed vectors to straightening classes within their own length."""
    acc: Counter = Counter()
    for c, v in terms:
        st = straighten(v)
        if st is not None:
            acc[st.parts] += c * st.sign
    return {k: v for k, v in sorted(acc.items()) if v}


def iden1_sides(lam: Partition, b: int, r: int):
    lam_r = pad(lam, r)
    lhs = [(1, tuple(x + b for x in s)) for s in distinct_permutations(lam_r)]
    rhs = []
    for mu in partitions_list(sum(lam), max_len=r):
        c = inverse_kostka_entry(lam, mu)
        if c:
            rhs.append((c, tuple(x + b for x in pad(mu, r))))
    return lhs, rhs


def iden2_sides(lam: Partition, m: int, a: int, bounded: bool = True):
    """Both sides of the E-set expansion as signed index vectors.

    With ``bounded`` the inner sum runs over ``rho`` with parts at most
    ``a``, as literally stated; that form only holds when ``len(lam) <= a``.
    Otherwise ``rho`` runs over all partitions with at most ``m`` parts.
    """
    n = sum(lam)
    lhs = [(c, tuple(a - x for x in E)) for E, c in sorted(e_set(m, lam).items())]
    coeff: Counter = Counter()
    for omega in partitions_list(n):
        k1 = kostka(omega, lam)
        if not k1:
            continue
        om_c = conjugate(omega)
        for gam in partitions_list(n, max_len=m):
            k2 = kostka(om_c, gam)
            if not k2:
                continue
            for rho in partitions_list(n, max_len=m, max_part=a if bounded else None):
                k3 = inverse_kostka_entry(gam, rho)
                if k3:
                    coeff[rho] += k1 * k2 * k3
    rhs = [(c, tuple(a - x for x in reverse(rho, m))) for rho, c in sorted(coeff.items()) if c]
    return lhs, rhs


@_register("iden1")
def _iden1_op(p):
    lam, b, r, nu = tuple(p["lam"]), p["b"], p["r"], tuple(p["nu"])
    lhs, rhs = iden1_sides(lam, b, r)
    L = op_sum([(TPoly.const(c), op_B(v + nu)) for c, v in lhs])
    R = op_sum([(TPoly.const(c), op_B(v + nu)) for c, v in rhs])
    return L, R


@_register("iden2")
def _iden2_op(p):
    lam, m, a, nu = tuple(p["lam"]), p["m"], p["a"], tuple(p["nu"])
    lhs, rhs = iden2_sides(lam, m, a, p.get("bounded", True))
    L = op_sum([(TPoly.const(c), op_B(v + nu)) for c, v in lhs])
    R = op_sum([(TPoly.const(c), op_B(v + nu)) for c, v in rhs])
    return L, R


@_timed
def verify_lemma_kostka(variant: str, lam: Partition, *, r: int = 0, b: int = 0, m: int = 0, a: int = 0,
                        nu: Partition = (), D: int | None = None, bounded: bool | None = None) -> VerifyReport:
    """Compare both sides as formal sums of straightening classes.

    With ``D`` given, additionally compare them as operators ``B_{*, nu}``
    on the degree-``D`` test set.  For ``iden2``, ``bounded`` defaults to
    the literal ``rho``-range exactly when ``len(lam) <= a``.
    """
    lam = strip(tuple(lam))
    if variant == "iden1":
        if len(lam) > r:
            raise ValueError("iden1 needs len(lam) <= r")
        lhs, rhs = iden1_sides(lam, b, r)
        params = _params(lam=lam, b=b, r=r, nu=nu)
    elif variant == "iden2":
        if len(lam) > m or (lam and lam[0] > a):
            raise ValueError("iden2 needs lam inside the m x a box")
        if bounded is None:
            bounded = len(lam) <= a
        lhs, rhs = iden2_sides(lam, m, a, bounded)
        params = _params(lam=lam, m=m, a=a, nu=nu, bounded=bounded)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    cl, cr = _classes(lhs), _classes(rhs)
    if cl != cr:
        wit = {"lhs_classes": [[list(k), v] for k, v in cl.items()], "rhs_classes": [[list(k), v] for k, v in cr.items()]}
        return VerifyReport(variant, params, False, wit)
    if D is not None:
        return operator_report(variant, dict(params, D=D), hl_test_set(D))
    return VerifyReport(variant, params, True)


def genlemma_sides(mu, gamma, nu):
    r, m, n = len(mu), len(gamma), len(nu)
    left: Counter = Counter()
    for I in product(range(n + 1), repeat=m):
        for E, c in e_set(n, I).items():
            key = (tuple(mu) + tuple(g + i for g, i in zip(gamma, I)), tuple(x - e for x, e in zip(nu, E)))
            left[(sum(I), key)] += c
    right: Counter = Counter()
    for I in product(range(m + 1), repeat=r):
        for E, c in e_set(m, I).items():
            key = (tuple(x + i for x, i in zip(mu, I)), tuple(g - e for g, e in zip(gamma, E)) + tuple(nu))
            right[(sum(I), key)] += c
    return left, right


@_register("genlemma")
def _genlemma(p):
    left, right = genlemma_sides(tuple(p["mu"]), tuple(p["gamma"]), tuple(p["nu"]))

    def build(side):
        return op_sum([(_sign_t(deg) * c, op_seq(op_B(i1), op_B(i2))) for (deg, (i1, i2)), c in sorted(side.items())])

    return build(left), build(right)


@_timed
def verify_lemma_general(mu, gamma, nu, D: int) -> VerifyReport:
    """Both double sums applied to the degree-``D`` test set; zero entries are kept."""
    return operator_report("genlemma", _params(mu=tuple(mu), gamma=tuple(gamma), nu=tuple(nu), D=D), hl_test_set(D))


# ---------------------------------------------------------------------------
# suites


def suite_hall_littlewood(budget: Budget) -> Iterator[VerifyReport]:
    for n in range(budget.max_degree + 1):
        t0 = time.perf_counter()
        parts, K = kostka_matrix(n)
        index = {p: i for i, p in enumerate(parts)}
        problems = []
        for j, lam in enumerate(parts):
            H = hall_littlewood(lam)
            if H.coefficient(lam) != ONE:
                problems.append({"lam": list(lam), "issue": "leading coefficient"})
            for mu, c in H.terms.items():
                if mu != lam and not (index[mu] < j and _dominates(mu, lam)):
                    problems.append({"lam": list(lam), "mu": list(mu), "issue": "support not dominating"})
                if not c.is_nonnegative():
                    problems.append({"lam": list(lam), "mu": list(mu), "issue": "negative coefficient"})
            col = [H.coefficient(mu).eval_at_one() for mu in parts]
            if col != [K[i][j] for i in range(len(parts))]:
                problems.append({"lam": list(lam), "issue": "t=1 column differs from Kostka"})
        yield VerifyReport("hall-littlewood", _params(degree=n), not problems, {"problems": problems} if problems else None,
                           (time.perf_counter() - t0) * 1000)


def _dominates(mu: Partition, lam: Partition) -> bool:
    from .partitions import dominance_leq

    return dominance_leq(lam, mu)


def suite_t_one(budget: Budget) -> Iterator[VerifyReport]:
    deg = min(6, budget.max_degree)
    tests = [SymFunc.basis_element(mu) for mu in partitions_upto(budget.test_degree)]
    for lam in partitions_upto(deg, max_len=4):
        t0 = time.perf_counter()
        witness = first_mismatch(lambda f: apply_B_vector(lam, f).at_t_one(),
                                 lambda f: multiply(SymFunc.basis_element(lam), f), tests)
        yield VerifyReport("t-one", _params(lam=lam, mu_degree=budget.test_degree), witness is None, witness,
                           (time.perf_counter() - t0) * 1000)


def suite_theorem1(budget: Budget) -> Iterator[VerifyReport]:
    D = budget.test_degree
    for a, r, m, nu in theorem1_instances(budget.max_degree):
        yield verify_theorem1(a, r, m, nu, D)
        yield verify_corollary1(a, r, m, nu)


def suite_identities(budget: Budget, max_k: int = 4) -> Iterator[VerifyReport]:
    D = budget.test_degree
    for k in range(1, max_k + 1):
        for l in range(1, k + 1):
            for i in range(l, k + 1):
                yield verify_identity_rect_commute(k, l, i, D)
    for variant in ("I3", "I2", "I4"):
        for k in range(1, max_k + 1):
            for l in range(1, k + 1):
                for nu in partitions_upto(budget.max_degree, max_part=k):
                    if identity_preconditions(k, l, nu, variant):
                        yield verify_identity_structured(k, l, nu, variant, D)


def suite_lemmas(budget: Budget) -> Iterator[VerifyReport]:
    for m in range(1, 5):
        for d in range(m + 1):
            ok = len(e_vectors(m, d)) == comb(m, d)
            yield VerifyReport("e-set-size", _params(m=m, d=d), ok)
    cap = min(6, budget.max_degree)
    for r in range(1, 5):
        for lam in partitions_upto(cap, max_len=r):
            for b in range(0, 3):
                D = min(2, budget.test_degree) if r <= 2 and sum(lam) <= 3 and b <= 1 else None
                yield verify_lemma_kostka("iden1", lam, r=r, b=b, nu=(1,) if D is not None else (), D=D)
    for m in range(1, 5):
        for a in range(0, 4):
            for lam in partitions_upto(min(m * a, cap), max_len=m, max_part=a):
                D = min(2, budget.test_degree) if m <= 2 and a <= 2 else None
                yield verify_lemma_kostka("iden2", lam, m=m, a=a, nu=(1,) if D is not None else (), D=D)
    D = min(2, budget.test_degree)
    shapes = [(), (1,), (2,), (1, 1), (2, 1), (1, 0)]
    for mu in shapes:
        for gamma in shapes:
            for nu in shapes:
                if len(mu) + len(gamma) + len(nu) <= 5 and sum(mu) + sum(gamma) + sum(nu) <= budget.max_degree:
                    yield verify_lemma_general(mu, gamma, nu, D)


def suite_properties(budget: Budget) -> Iterator[VerifyReport]:
    tests = hl_test_set(budget.test_degree)
    for m in range(-2, 5):
        for n in range(-2, 5):
            yield check_commutation(m, n, tests)
    small = hl_test_set(min(3, budget.test_degree))
    for L in (2, 3):
        for v in product(range(-1, 5), repeat=L):
            yield operator_report("reordering", _params(v=v), small)
    # widest/narrowest entry of a reordered concatenation, and vanishing
    cap = min(4, budget.max_degree)
    for mu in partitions_upto(cap):
        for nu in partitions_upto(cap):
            if not mu or not nu:
                continue
            m, r = len(mu), len(nu)
            first, last = max(mu[0], nu[0] - m), min(mu[-1] + r, nu[-1])
            st = straighten(mu + nu)
            if first < last:
                yield operator_report("lemmax2", _params(mu=mu, nu=nu), small)
            ok = st is None or (st.parts[0] == first and st.parts[-1] == last)
            yield VerifyReport("lemmax", _params(mu=mu, nu=nu), ok,
                               None if ok else {"straightened": list(st.parts), "expected": [first, last]})
    for l in range(-4, 0):
        ok = apply_B_int(l, SymFunc.one()).is_zero()
        yield VerifyReport("negative-on-one", _params(l=l), ok)


def suite_kspace(budget: Budget, max_k: int = 3) -> Iterator[VerifyReport]:
    N = budget.max_degree
    for k in range(1, max_k + 1):
        for n in range(N + 1):
            table = g_table(k, n)
            ktab = kschur_table(k, n)
            ok = table.upper_triangular and len(table.parts) == len(k_bounded_partitions(n, k)) == len(ktab.functions)
            ok = ok and all(f.coefficient(lam) == ONE and min(f.terms) == lam for lam, f in ktab.functions.items())
            notes = [] if table.unit_diagonal else ["non-unit diagonal"]
            yield VerifyReport("basis", _params(k=k, degree=n), ok, None, notes=notes)
    cap = min(N, 7)
    for k in range(1, max_k + 1):
        hooks = [lam for lam in partitions_upto(k, max_part=k) if lam and main_hook(lam) <= k]
        for lam in hooks:
            for mu in partitions_upto(cap - sum(lam), max_part=k):
                f = hall_littlewood(mu)
                img = apply_B_vector(lam, f)
                ok1 = lambda_ak_membership(img, 0, k)
                ok2 = lambda_ak_membership(img, lam[0], k)
                yield VerifyReport("lempreserve", _params(k=k, lam=lam, mu=mu), ok1)
                yield VerifyReport("lemigen", _params(k=k, lam=lam, mu=mu), ok2)
        for i in range(-1, k + 1):
            for mu in partitions_upto(cap - max(i, 0), max_part=k):
                img = apply_B_int(i, hall_littlewood(mu))
                yield VerifyReport("j1", _params(k=k, i=i, mu=mu), lambda_ak_membership(img, i, k))
        for i in range(1, k):
            for lam in partitions_upto(cap - i, max_part=k):
                if lam and lam[0] >= i + 1:
                    img = apply_B_int(i, hall_littlewood(lam))
                    yield VerifyReport("lemikplus", _params(k=k, i=i, lam=lam), lambda_ak_membership(img, i + 1, k))
        # B_lam G_mu = G_(lam, mu) when h(lam) = k and lam_L >= mu_1
        for lam in hooks:
            if main_hook(lam) != k:
                continue
            for mu in partitions_upto(cap - sum(lam), max_part=lam[-1]):
                img = apply_B_vector(lam, g_poly(mu, k))
                ok = omega_membership(img, k) == {lam[0]} and img == g_poly(lam + mu, k)
                yield VerifyReport("lemomega", _params(k=k, lam=lam, mu=mu), ok)
        gs = [g_poly(lam, k) for lam in partitions_upto(min(cap, 5), max_part=k)]
        for R in k_rectangles(k):
            l = R[0]
            for j in range(l + 1, k + 1):
                lhs = lambda f, j=j, R=R: project_T(j, k, apply_B_vector(R, f))
                rhs = lambda f, j=j, R=R: apply_B_vector(R, project_T(j, k, f))
                w = first_mismatch(lhs, rhs, gs)
                yield VerifyReport("lemcommu", _params(k=k, rect=R, j=j), w is None, w)
        for lam in hooks:
            lhs = lambda f, lam=lam: project_T(lam[0], k, apply_B_vector(lam, f))
            rhs = lambda f, lam=lam: project_T(lam[0], k, apply_B_int(lam[0], apply_B_vector(lam[1:], f)))
            w = first_mismatch(lhs, rhs, [g for g in gs if sum(lam) + max(g.degrees()) <= cap + 2])
            yield VerifyReport("lemsepara", _params(k=k, lam=lam), w is None, w)


def suite_omega(budget: Budget, max_k: int = 3) -> Iterator[VerifyReport]:
    cap = min(7, budget.max_degree)
    for k in range(1, max_k + 1):
        for R in k_rectangles(k):
            l = R[0]
            for lam in partitions_upto(cap, max_part=k):
                img = apply_B_vector(R, g_poly(lam, k))
                j = lam[0] if lam else 0
                expected = {max(j, l)}
                try:
                    got = omega_membership(img, k)
                except NotInSpace as exc:
                    yield VerifyReport("omega-invariance", _params(k=k, rect=R, lam=lam), False,
                                       {"residual": exc.residual.to_json()})
                    continue
                ok = got == expected
                yield VerifyReport("omega-invariance", _params(k=k, rect=R, lam=lam), ok,
                                   None if ok else {"support": sorted(got), "expected": sorted(expected)})


def suite_rectangle_kschur(budget: Budget, max_k: int = 3) -> Iterator[VerifyReport]:
    cap = min(6, budget.max_degree)
    for k in range(1, max_k + 1):
        for R in k_rectangles(k):
            for lam in partitions_upto(cap, max_part=k):
                d = rectangle_exponent(R, lam)
                lhs = apply_B_vector(R, k_schur(lam, k))
                target = k_schur(union(R, lam), k)
                ok = lhs == target.shift_t(d)
                yield VerifyReport("rectangle-action", _params(k=k, rect=R, lam=lam, exponent=d), ok,
                                   None if ok else {"lhs": lhs.to_json(), "rhs": target.shift_t(d).to_json()})
                prod = multiply(SymFunc.basis_element(R), k_schur(lam, k).at_t_one())
                ok1 = prod == target.at_t_one()
                yield VerifyReport("rectangle-product-t1", _params(k=k, rect=R, lam=lam), ok1)
    for k in range(1, 6):
        irr = enumerate_k_irreducibles(k)
        ok = len(irr) == factorial(k) and all(is_k_irreducible(p, k) for p in irr)
        yield VerifyReport("irreducible-count", _params(k=k, count=len(irr)), ok)
    paper_k3 = [(), (1,), (2,), (1, 1), (2, 1), (2, 1, 1)]
    yield VerifyReport("irreducible-list-k3", _params(k=3), enumerate_k_irreducibles(3) == paper_k3)
    for k in range(1, max_k + 1):
        for lam in partitions_upto(budget.max_degree, max_part=k):
            c, rects, mu = reduce_to_irreducible(lam, k)
            ok = reconstruct(rects, mu, k) == k_schur(lam, k).shift_t(c)
            yield VerifyReport("reduce-reconstruct", _params(k=k, lam=lam, c=c, rects=rects, mu=mu), ok)
            target = k_schur(lam, k)
            exps = set()
            ok = True
            for c2, rects2, mu2 in extraction_orders(lam, k):
                exps.add(c2)
                ok = ok and mu2 == mu and reconstruct(rects2, mu2, k) == target.shift_t(c2)
            notes = [] if len(exps) == 1 else ["exponent depends on extraction order"]
            yield VerifyReport("reduce-any-order", _params(k=k, lam=lam, exponents=sorted(exps)), ok, notes=notes)
            qnf = kspace.quotient_normal_form(SymFunc.wrap({lam: ONE}, f"kschur({k})"), k)
            expected = {lam: ONE} if is_k_irreducible(lam, k) else {}
            yield VerifyReport("quotient-normal-form", _params(k=k, lam=lam), qnf.terms == expected)


def extraction_orders(lam: Partition, k: int) -> list[tuple[int, list[Partition], Partition]]:
    """Every way of stripping k-rectangles from ``lam`` one at a time, with its exponent."""
    lam = strip(tuple(lam))
    found = contained_rectangles(lam, k)
    if not found:
        return [(0, [], lam)]
    out = []
    for rect in found:
        rem = list(lam)
        for part in rect:
            rem.remove(part)
        rem = tuple(rem)
        d = rectangle_exponent(rect, rem)
        for c, rects, mu in extraction_orders(rem, k):
            out.append((c + d, [rect] + rects, mu))
    return out


def suite_appendix(budget: Budget) -> Iterator[VerifyReport]:
    cap = min(6, budget.max_degree)
    for m in range(1, 5):
        for n in range(cap + 1):
            shapes = partitions_list(n, max_len=m)
            for a in range(0, 4):
                bad = []
                for lam in shapes:
                    for mu in shapes:
                        x = inverse_kostka_entry(lam, mu)
                        y = inverse_kostka_entry(strip(add(pad(lam, m), rectangle(a, m))),
                                                 strip(add(pad(mu, m), rectangle(a, m))))
                        if x != y:
                            bad.append([list(lam), list(mu)])
                yield VerifyReport("kostka-shift", _params(m=m, degree=n, a=a), not bad, {"pairs": bad} if bad else None)
                boxed = [lam for lam in shapes if not lam or lam[0] <= a]
                bad = []
                for lam in boxed:
                    for mu in boxed:
                        x = inverse_kostka_entry(lam, mu)
                        cl = strip(tuple(a - v for v in reverse(lam, m)))
                        cm = strip(tuple(a - v for v in reverse(mu, m)))
                        if x != inverse_kostka_entry(cl, cm):
                            bad.append([list(lam), list(mu)])
                if boxed:
                    yield VerifyReport("kostka-complement", _params(m=m, degree=n, a=a), not bad,
                                       {"pairs": bad} if bad else None)
    rng = random.Random(20240611)
    for m in range(1, 4):
        for a in range(0, 5):
            for lam in partitions_upto(m * a, max_len=m, max_part=a):
                comp = strip(tuple(a - v for v in reverse(lam, m)))
                bad = None
                for _ in range(20):
                    pts = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(m)]
                    inv = [1 / x for x in pts]
                    scale = Fraction(1)
                    for x in pts:
                        scale *= x ** a
                    lhs = eval_schur(lam, inv) * scale
                    rhs = eval_schur(comp, pts)
                    if lhs != rhs:
                        bad = {"points": [str(x) for x in pts], "lhs": str(lhs), "rhs": str(rhs)}
                        break
                yield VerifyReport("schur-reciprocal", _params(m=m, a=a, lam=lam), bad is None, bad)
    for n in range(1, 5):
        for lam in partitions_upto(budget.max_degree, max_len=n):
            v = pad(lam, n)
            lhs = SymFunc.zero()
            for p in distinct_permutations(v):
                lhs = lhs + schur_vector(p)
            full = to_schur(SymFunc.basis_element(lam, "m"))
            rhs = SymFunc.wrap({mu: c for mu, c in full.terms.items() if len(mu) <= n})
            ok = lhs == rhs
            pts = [Fraction(i + 2, i + 1) for i in range(n)]
            ok = ok and eval_in_vars(lhs, pts) == oracles.monomial_eval(lam, pts)
            yield VerifyReport("monomial-as-schur", _params(n=n, lam=lam), ok,
                               None if ok else {"lhs": lhs.to_json(), "rhs": rhs.to_json()})


def suite_oracles(budget: Budget) -> Iterator[VerifyReport]:
    N = budget.max_degree
    for n in range(N + 1):
        bad = []
        for a in range(n + 1):
            for lam in partitions_list(a):
                for mu in partitions_list(n - a):
                    if schur_product(lam, mu) != oracles.schur_product_oracle(lam, mu):
                        bad.append([list(lam), list(mu)])
        yield VerifyReport("product-oracle", _params(degree=n), not bad, {"pairs": bad} if bad else None)
    for i in range(min(6, N) + 1):
        ok = hook_plethysm(i) == oracles.hook_plethysm_oracle(i)
        yield VerifyReport("plethysm-oracle", _params(i=i), ok)
    for n in range(min(N, 7) + 1):
        parts = partitions_list(n)
        ok = all(kostka(lam, mu) == oracles.kostka_ssyt(lam, mu) for lam in parts for mu in parts)
        yield VerifyReport("kostka-oracle", _params(degree=n), ok)


SUITES: dict[str, Callable[[Budget], Iterator[VerifyReport]]] = {
    "hall-littlewood": suite_hall_littlewood,
    "t-one": suite_t_one,
    "theorem1": suite_theorem1,
    "identities": suite_identities,
    "lemmas": suite_lemmas,
    "properties": suite_properties,
    "kspace": suite_kspace,
    "omega": suite_omega,
    "rectangle-kschur": suite_rectangle_kschur,
    "appendix": suite_appendix,
    "oracles": suite_oracles,
}


def sweep(suite: str, budget: Budget = Budget()) -> list[VerifyReport]:
    """Run every in-budget instance of a suite (or ``"all"``) in a fixed order."""
    if suite == "all":
        out: list[VerifyReport] = []
        for name in SUITES:
            out.extend(sweep(name, budget))
        return out
    try:
        fn = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'") from None
    return list(fn(budget))


def summarize(reports: list[VerifyReport]) -> dict:
    by_id: dict[str, list[int]] = {}
    for r in reports:
        s = by_id.setdefault(r.id, [0, 0])
        s[0] += 1
        s[1] += r.passed
    return {
        "total": len(reports),
        "passed": sum(r.passed for r in reports),
        "failed": sum(not r.passed for r in reports),
        "by_id": {k: {"total": v[0], "passed": v[1]} for k, v in sorted(by_id.items())},
    }
