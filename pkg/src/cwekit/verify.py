"""Cross-check sweeps over every prime power q up to a bound.

For each q (default field realization) the sweep checks, exactly:

* factorization: expand(factor_norm_poly(c)) == x^(q+1) - c and the
  closed-form factor multiset equals the brute-force one, for every c;
* for every N | (q-1): closed-form CWE equals the brute-force CWE,
  its Hamming collapse equals the weight trichotomy, and the
  substitution probability agrees between both CWE routes.

Results are plain dicts so they serialize directly and merge
deterministically whether the sweep runs sequentially or on a process
pool (one worker per q, results reassembled in q order).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .authcodes import substitution_probability
from .codes import hamming_distribution
from .cwe import cwe_brute_force, cwe_closed_form, hamming_from_cwe
from .factorizer import brute_force_factor, expand, factor_norm_poly, norm_binomial
from .galois import FieldSpec, build_field, prime_powers


def _check_factorization(ctx) -> str:
    for e in range(ctx.q - 1):
        c = ctx.fq(e)
        closed = factor_norm_poly(ctx, c)
        if expand(ctx, closed) != norm_binomial(ctx, c):
            return f"expand(factor_norm_poly(a^{e})) != x^(q+1) - a^{e}"
        if closed.factors != brute_force_factor(ctx, c).factors:
            return f"factor multisets differ at c = a^{e}"
    return "ok"


def _check_code(ctx, N: int) -> dict:
    closed = cwe_closed_form(ctx, N)
    brute = cwe_brute_force(ctx, N)
    return {
        "N": N,
        "cwe": "ok" if closed == brute else "closed form differs from oracle",
        "hamming": (
            "ok"
            if hamming_from_cwe(brute) == hamming_distribution(ctx, N)
            else "collapsed CWE differs from weight trichotomy"
        ),
        "p_s": (
            "ok"
            if substitution_probability(closed) == substitution_probability(brute)
            else "substitution probability differs between routes"
        ),
    }


def verify_field(pm: tuple[int, int]) -> dict:
    """All checks for one prime power; runs standalone in a worker."""
    p, m = pm
    ctx = build_field(FieldSpec(p=p, m=m))
    q = ctx.q
    entry = {
        "q": q,
        "p": p,
        "m": m,
        "factorization": _check_factorization(ctx),
        "codes": [_check_code(ctx, N) for N in range(1, q) if (q - 1) % N == 0],
    }
    entry["ok"] = entry["factorization"] == "ok" and all(
        c["cwe"] == "ok" and c["hamming"] == "ok" and c["p_s"] == "ok"
        for c in entry["codes"]
    )
    return entry


def run_verification(qmax: int, threads: int = 1) -> dict:
    """Sweep every prime power q <= qmax; deterministic result order."""
    pms = [(p, m) for p, m, _q in prime_powers(qmax)]
    if threads > 1 and len(pms) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(verify_field, pms))
    else:
        results = [verify_field(pm) for pm in pms]
    return {
        "qmax": qmax,
        "results": results,
        "status": "ok" if all(r["ok"] for r in results) else "fail",
    }
