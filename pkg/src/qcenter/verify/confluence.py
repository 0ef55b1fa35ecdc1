"""Diamond-lemma overlap checks and an independent randomized reduction oracle."""

import random
from dataclasses import dataclass, field

from ..algebra import PLAIN, QBRACKET, SO, AlgebraElement, build_presentation
from ..coeffs import CoeffDomain
from .relations import check_relations


@dataclass
class ConfluenceReport:
    confluent: bool
    failures: list = field(default_factory=list)  # (X, Y, Z), left nf, right nf
    overlaps: int = 0


def check_local_confluence(pres, max_overlap_degree=3):
    """Resolve every overlap X*Y*Z with X > Y > Z both ways.

    The rule system is quadratic, so degree-3 overlaps are all critical pairs.
    """
    if max_overlap_degree != 3:
        raise ValueError("only degree-3 overlaps occur for a quadratic rule system")
    letters = pres.letters
    failures, overlaps = [], 0
    for i in range(len(letters)):
        x = pres.letter(letters[i])
        for j in range(i):
            xy = pres.straighten_pair(letters[i], letters[j])
            for k in range(j):
                overlaps += 1
                left = xy * pres.letter(letters[k])
                right = x * pres.straighten_pair(letters[j], letters[k])
                if left != right:
                    failures.append(((letters[i], letters[j], letters[k]), left, right))
    return ConfluenceReport(not failures, failures, overlaps)


def strategy_oracle(word, pres, seed=0, strategy="random"):
    """Reduce a flat word with the raw rule table, picking redexes by ``strategy``.

    ``strategy`` is ``"random"`` (seeded), ``"leftmost"`` or ``"rightmost"``.
    Uses only the raw rules read off the relations, never the memoized
    product engine, so agreement with ``normal_form`` is an independent check.
    """
    rng = random.Random(seed)
    one = pres.domain.one
    idx = tuple(pres.lookup(g) for g in word)
    pending = {idx: one}
    done = {}
    while pending:
        keys = sorted(pending)
        if strategy == "random":
            rng.shuffle(keys)
        for w in keys:
            c = pending.pop(w, None)
            if c is None:
                continue
            descents = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
            if not descents:
                _add(done, w, c)
                continue
            if strategy == "leftmost":
                p = descents[0]
            elif strategy == "rightmost":
                p = descents[-1]
            else:
                p = rng.choice(descents)
            for coeff, rhs in pres.raw_rule(w[p], w[p + 1]):
                _add(pending, w[:p] + tuple(rhs) + w[p + 2:], c * pres.coerce_scalar(coeff))
    terms = {}
    for w, c in done.items():
        _add(terms, _runs(w), c)
    return AlgebraElement(pres, terms)


def _add(acc, key, c):
    v = acc.get(key)
    if v is None:
        if c:
            acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def _runs(word):
    out = []
    for i in word:
        if out and out[-1][0] == i:
            out[-1] = (i, out[-1][1] + 1)
        else:
            out.append((i, 1))
    return tuple(out)


def random_word(pres, rng, max_degree=6):
    degree = rng.randint(1, max_degree)
    return [rng.choice(pres.letters) for _ in range(degree)]


def pbw_oracle_sweep(pres, count=1000, max_degree=6, seed=0):
    """Compare normal_form with the randomized oracle on ``count`` random words.

    Returns the list of mismatching words (empty when PBW uniqueness holds).
    """
    rng = random.Random(seed)
    mismatches = []
    for t in range(count):
        word = random_word(pres, rng, max_degree)
        if pres.word(word) != strategy_oracle(word, pres, seed=rng.randrange(2 ** 32)):
            mismatches.append(word)
    return mismatches


def crossing_finding(m=4, domain=None):
    """Which crossing reading yields a confluent system with zero residuals in so_m."""
    domain = domain or CoeffDomain.generic()
    out = {}
    for variant in (QBRACKET, PLAIN):
        pres = build_presentation(SO, m, domain, variant)
        report = check_local_confluence(pres)
        bad = [rid for rid, r in check_relations(pres) if r]
        out[variant] = {"confluent": report.confluent, "failing_overlaps": len(report.failures),
                        "nonzero_residuals": bad}
    winners = [v for v, r in out.items() if r["confluent"] and not r["nonzero_residuals"]]
    return winners, out
