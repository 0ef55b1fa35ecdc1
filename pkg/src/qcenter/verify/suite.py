"""Claim runner producing the machine-readable verification report."""

import time

from ..algebra import EPS_SO, ISO, SO, So, Trans, build_presentation
from ..coeffs import CoeffDomain
from ..elements import (casimir_iso2, casimir_so3, cn_element, cn_sum, contract_to_iso2, eps_iso,
                        pq_polys, so3_letters, tilde_cn)
from .centrality import is_central
from .confluence import check_local_confluence, crossing_finding, pbw_oracle_sweep
from .identities import sweep_identity
from .relations import check_relations, translation_serre_minus_form

TARGETS = ("relations", "confluence", "pbw", "pm", "identities", "theorems")


def check_pm_identity(m, pres=None):
    """normal_form(I_3 I_1^m) == p_m(I_1) I_2 + q_m(I_1) I_3 in so_3."""
    pres = pres or build_presentation(SO, 3)
    i1, i2, i3 = so3_letters(pres)
    p, q = pq_polys(m)
    return i3 * i1 ** m == p.evaluate(i1) * i2 + q.evaluate(i1) * i3


def n2_counterexample():
    """Commutator of C^(2)(I_1) = I_1^2 / 2 with I_2 at q = -1; nonzero."""
    pres = build_presentation(SO, 3, CoeffDomain(2, strict=False))
    verdict = is_central(cn_sum(pres.letter(So(2, 1)), 2))
    return verdict


class Report:
    def __init__(self):
        self.records = []

    def claim(self, name, parameters, fn):
        start = time.perf_counter()
        result = fn()
        verdict, witness = result if isinstance(result, tuple) else (result, None)
        rec = {"claim": name, "parameters": parameters, "verdict": bool(verdict),
               "millis": round(1000 * (time.perf_counter() - start), 3)}
        if witness is not None:
            rec["witness"] = witness
        self.records.append(rec)
        return rec

    @property
    def ok(self):
        return all(r["verdict"] for r in self.records)


def _central_claim(element):
    v = is_central(element)
    if v.central:
        return True
    g, c = v.witness
    return False, f"[X, {g}] = {c}"


def _params(pres, **extra):
    out = {"algebra": pres.name, "domain": pres.domain.describe()}
    if pres.crossing:
        out["crossing"] = pres.crossing
    out.update(extra)
    return out


def _relations(rep, pres):
    def run():
        bad = [(rid, r) for rid, r in check_relations(pres) if r]
        return (True, None) if not bad else (False, f"{bad[0][0]}: {bad[0][1]}")
    rep.claim("relations", _params(pres), run)
    if pres.family == ISO:
        i_top = pres.letter(So(pres.m, pres.m - 1))
        rep.claim("finding: translation Serre relation has rhs 0; the -I form fails",
                  _params(pres), lambda: translation_serre_minus_form(pres) == i_top)


def _confluence(rep, pres):
    def run():
        r = check_local_confluence(pres)
        if r.confluent:
            return True
        (x, y, z), left, right = r.failures[0]
        return False, f"overlap {x}*{y}*{z}: {left} != {right}"
    rep.claim("local confluence", _params(pres), run)
    if pres.family == SO and pres.m >= 4:
        def finding():
            winners, detail = crossing_finding(pres.m)
            return len(winners) == 1, f"selected crossing variant: {winners}; {detail}"
        rep.claim("crossing variant finding", {"algebra": pres.name}, finding)


def _pbw(rep, pres, seed, count):
    def run():
        bad = pbw_oracle_sweep(pres, count=count, max_degree=6, seed=seed)
        return (True, None) if not bad else (False, "word " + "*".join(map(str, bad[0])))
    rep.claim("PBW uniqueness (random strategy oracle)", _params(pres, words=count, seed=seed), run)


def _pm(rep):
    pres = build_presentation(SO, 3)
    for m in range(1, 9):
        rep.claim("I3*I1^m = p_m(I1)*I2 + q_m(I1)*I3", {"m": m},
                  lambda m=m: check_pm_identity(m, pres))


def _identities(rep):
    for which in ("A", "B"):
        def run(which=which):
            checked, failures = sweep_identity(which, 12)
            if not failures:
                return True, None
            return False, f"minimal failing tuple {failures[0]}"
        rep.claim(f"combinatorial identity {which}", {"max": 12}, run)


def _theorems(rep, pres):
    d = pres.domain
    n = d.root_of_unity
    if pres.family == SO and pres.m == 3:
        rep.claim("Casimir C_q central", _params(pres), lambda: _central_claim(casimir_so3(pres)))
        if n is None:
            neg = cn_element(So(2, 1), 3, pres)
            rep.claim("C^(3)(I_1) not central at generic q", _params(pres),
                      lambda: not is_central(neg).central)
        rep.claim("C^(2)(I_1) not central at q = -1", {"algebra": "so:3", "n": 2},
                  lambda: not n2_counterexample().central)
    if pres.family == ISO and pres.m == 2:
        rep.claim("iso_2 Casimir central", _params(pres), lambda: _central_claim(casimir_iso2(pres)))
    if n is None:
        return
    if pres.family in (SO, ISO):
        for g in pres.letters:
            if g.kind == "I":
                rep.claim(f"C^({n})({g}) central", _params(pres, n=n),
                          lambda g=g: _central_claim(cn_element(g, n, pres)))
            else:
                rep.claim(f"{g}^{n} central", _params(pres, n=n),
                          lambda g=g: _central_claim(pres.letter(g, n)))
    if pres.family == EPS_SO:
        for i in (1, 2, 3):
            rep.claim(f"tilde-C^({n})(J_{i}) central", _params(pres, n=n),
                      lambda i=i: _central_claim(tilde_cn(i, n, pres)))
        target = build_presentation(ISO, 2, d.with_eps(False))
        rep.claim("contraction of tilde-C(J_1) is T_1^n", _params(pres, n=n),
                  lambda: contract_to_iso2(tilde_cn(1, n, pres), target) == target.letter(Trans(1), n))
        rep.claim("eps-isomorphism maps relations to identities", _params(pres),
                  lambda: all(not eps_iso(r) for _, r in check_relations(pres)))


def run_check(pres, targets=TARGETS, seed=0, oracle_words=1000):
    rep = Report()
    for t in targets:
        if t == "relations":
            _relations(rep, pres)
        elif t == "confluence":
            _confluence(rep, pres)
        elif t == "pbw":
            _pbw(rep, pres, seed, oracle_words)
        elif t == "pm":
            _pm(rep)
        elif t == "identities":
            _identities(rep)
        elif t == "theorems":
            _theorems(rep, pres)
        else:
            raise ValueError(f"unknown check target {t!r}")
    return rep
