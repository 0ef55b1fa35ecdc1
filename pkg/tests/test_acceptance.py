"""Acceptance suite: one test and one printed PASS/FAIL line per criterion."""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qcenter.algebra import EPS_SO, ISO, PLAIN, SO, So, Trans, build_presentation
from qcenter.cli.formatting import format_element
from qcenter.cli.parser import parse_expression
from qcenter.coeffs import Q, Q_INV, S_INV, CoeffDomain
from qcenter.elements import (UniPoly, casimir_iso2, casimir_so3, cn_element, contract_to_iso2,
                              eps_iso, pq_polys, tilde_cn)
from qcenter.verify import (check_local_confluence, check_pm_identity, check_relations,
                            crossing_finding, identity_A_sides, identity_B_sides, is_central,
                            n2_counterexample, pbw_oracle_sweep, sweep_identity)

from strategies import rich_elements

SEED = 20240


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} "
                  f"({elapsed:.2f} s, limit {limit} s)")


def test_01_relation_soundness(capsys):
    with criterion(capsys, 1, "relation residuals vanish in so_3..6, iso_2..4, eps-so_3", 5):
        pres_list = ([build_presentation(SO, m) for m in range(3, 7)]
                     + [build_presentation(ISO, m) for m in range(2, 5)]
                     + [build_presentation(EPS_SO, 3)])
        for pres in pres_list:
            bad = [rid for rid, r in check_relations(pres) if r]
            assert bad == [], f"{pres.name}: {bad}"


def test_02_confluence_and_pbw(capsys):
    with criterion(capsys, 2, "local confluence and randomized PBW oracle (10^3 words/family)", 60):
        families = [(SO, m) for m in (3, 4, 5)] + [(ISO, m) for m in (2, 3, 4)]
        for family, m in families:
            pres = build_presentation(family, m)
            assert pres.crossing == PLAIN
            assert check_local_confluence(pres).confluent, pres.name
            assert pbw_oracle_sweep(pres, count=1000, max_degree=6, seed=SEED) == [], pres.name


def test_03_crossing_finding(capsys):
    with criterion(capsys, 3, "exactly one crossing variant is sound for so_4", 10):
        winners, details = crossing_finding(4)
        assert winners == [PLAIN], details
        assert not details["q"]["confluent"] and details["q"]["nonzero_residuals"]


def test_04_casimir(capsys):
    with criterion(capsys, 4, "so_3 Casimir central at generic q", 1):
        assert is_central(casimir_so3(build_presentation(SO, 3))).central


def test_05_so3_center_at_roots(capsys):
    with criterion(capsys, 5, "C^(n)(I_j) central in so_3 at roots n=3..7; controls", 60):
        for n in range(3, 8):
            pres = build_presentation(SO, 3, CoeffDomain.root(n))
            for g in (So(2, 1), So(3, 2), So(3, 1)):
                assert is_central(cn_element(g, n, pres)).central, (n, g)
        generic = build_presentation(SO, 3)
        assert not is_central(cn_element(So(2, 1), 3, generic)).central
        assert not n2_counterexample().central


def test_06_so4_so5_center_at_roots(capsys):
    with criterion(capsys, 6, "C^(n)(I_kl) central in so_4, so_5 at roots n=3,4,5", 600):
        for m in (4, 5):
            for n in (3, 4, 5):
                pres = build_presentation(SO, m, CoeffDomain.root(n))
                for g in pres.letters:
                    assert is_central(cn_element(g, n, pres)).central, (m, n, g)


def test_07_pm_identity(capsys):
    with criterion(capsys, 7, "I_3 I_1^m = p_m I_2 + q_m I_3 for m=1..8 with closed forms", 10):
        for m in range(1, 9):
            assert check_pm_identity(m), m
        p1, q1 = pq_polys(1)
        assert p1 == UniPoly.x_power(0, S_INV) and q1 == UniPoly.x_power(1, Q_INV)
        p2, q2 = pq_polys(2)
        assert p2 == UniPoly.x_power(1, S_INV * (Q + Q_INV))
        assert q2 == UniPoly.x_power(2, Q_INV * Q_INV) - UniPoly.x_power(0)


def test_08_combinatorial_identities(capsys):
    with criterion(capsys, 8, "identities A (N<=12) and B (n<=12) on all tuples", 10):
        assert identity_A_sides(2, 0, 0) == (2, 2)
        assert identity_A_sides(3, 1, 0) == (4, 4)
        assert identity_B_sides(3, 0, 0) == (Fraction(1, 3), Fraction(1, 3))
        assert identity_B_sides(3, 1, 1) == (1, 1)
        for which in ("A", "B"):
            checked, failures = sweep_identity(which, 12)
            assert failures == [], f"identity {which}: minimal failing tuple {failures[0]}"
            assert checked > 0


def test_09_iso2_and_eps_suite(capsys):
    with criterion(capsys, 9, "iso_2 Casimir and center at roots, eps-isomorphism, tilde-C, contraction", 60):
        assert is_central(casimir_iso2(build_presentation(ISO, 2))).central
        for n in range(3, 7):
            iso2 = build_presentation(ISO, 2, CoeffDomain.root(n))
            assert is_central(iso2.letter(Trans(1), n)).central
            assert is_central(iso2.letter(Trans(2), n)).central
            assert is_central(cn_element(So(2, 1), n, iso2)).central
            eps3 = build_presentation(EPS_SO, 3, CoeffDomain.root(n, with_epsilon=True))
            for i in (1, 2, 3):
                assert is_central(tilde_cn(i, n, eps3)).central, (n, i)
            assert contract_to_iso2(tilde_cn(1, n, eps3), iso2) == iso2.letter(Trans(1), n)
        eps3 = build_presentation(EPS_SO, 3)
        for rid, residual in check_relations(eps3):
            assert not eps_iso(residual), rid


def test_10_iso3_iso4_center_at_roots(capsys):
    with criterion(capsys, 10, "C^(n)(I_ij) and T_j^n central in iso_3, iso_4 at n=3,4", 300):
        for m in (3, 4):
            for n in (3, 4):
                pres = build_presentation(ISO, m, CoeffDomain.root(n))
                for g in pres.letters:
                    x = cn_element(g, n, pres) if g.kind == "I" else pres.letter(g, n)
                    assert is_central(x).central, (m, n, g)


_ROUND_TRIP = [build_presentation(SO, 4), build_presentation(SO, 3, CoeffDomain.root(5)),
               build_presentation(EPS_SO, 3)]


@settings(max_examples=1000, deadline=None, derandomize=True)
@given(st.sampled_from(_ROUND_TRIP).flatmap(lambda p: st.tuples(st.just(p), rich_elements(p))))
def _round_trip(case):
    pres, a = case
    assert parse_expression(format_element(a), pres) == a


def test_11_cli(capsys):
    with criterion(capsys, 11, "parse/format round trip on 10^3 elements; qcenter check exits 0", 120):
        _round_trip()
        proc = subprocess.run([sys.executable, "-m", "qcenter.cli.main", "check", "--algebra",
                               "so:3", "--root-of-unity", "5"], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        report = json.loads(proc.stdout)
        assert isinstance(report, list) and report
        for rec in report:
            assert {"claim", "parameters", "verdict", "millis"} <= set(rec) <= {
                "claim", "parameters", "verdict", "witness", "millis"}
            assert rec["verdict"] is True
