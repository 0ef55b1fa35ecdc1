"""``qcenter`` command-line tool.

Exit codes: 0 success, 1 a verdict came out false (witness printed), 2 usage or parse error.
"""

import argparse
import json
import os
import sys

from ..algebra import EPS_SO, ISO, PLAIN, QBRACKET, SO, build_presentation, commutator
from ..coeffs import CoeffDomain
from ..elements import casimir_iso2, casimir_so3, cn_element, contract_to_iso2, tilde_cn
from ..errors import QCenterError
from ..verify import TARGETS, is_central, run_check
from .formatting import element_to_json, format_element
from .parser import parse_expression, parse_letter

VERBS = ("normalize", "commutator", "central", "casimir", "cn", "tilde-cn", "contract", "check")


class UsageError(Exception):
    pass


def _algebra(text):
    try:
        family, m = text.split(":")
        m = int(m)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected so:M, iso:M or eps-so:3, got {text!r}")
    if family not in (SO, ISO, EPS_SO):
        raise argparse.ArgumentTypeError(f"unknown algebra family {family!r}")
    return family, m


def build_parser():
    p = argparse.ArgumentParser(prog="qcenter", description="Normal forms and centrality checks "
                                "in nonstandard q-deformed enveloping algebras.",
                                allow_abbrev=False)
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--algebra", type=_algebra, required=True, metavar="so:M|iso:M|eps-so:3")
    p.add_argument("--root-of-unity", type=int, metavar="N",
                   help="specialize q to a primitive N-th root of unity")
    p.add_argument("--crossing", choices=(QBRACKET, PLAIN), default=PLAIN)
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("args", nargs="*", metavar="EXPR")
    return p


def _presentation(ns):
    family, m = ns.algebra
    domain = CoeffDomain.generic() if ns.root_of_unity is None else CoeffDomain.root(ns.root_of_unity)
    return build_presentation(family, m, domain, ns.crossing)


def _render(a, fmt):
    if fmt == "json":
        return json.dumps(element_to_json(a))
    return format_element(a)


def _need(ns, count, what):
    if len(ns.args) != count:
        raise UsageError(f"{ns.verb} expects {what}")


def _order(ns, pos):
    """Order n from a trailing argument or from --root-of-unity."""
    if len(ns.args) > pos:
        try:
            return int(ns.args[pos])
        except ValueError:
            raise UsageError(f"order must be an integer, got {ns.args[pos]!r}")
    if ns.root_of_unity is None:
        raise UsageError("give an order n or --root-of-unity")
    return ns.root_of_unity


def run(ns, out):
    """Execute a parsed command; returns the exit code."""
    pres = _presentation(ns)
    fmt = ns.format or ("json" if ns.verb == "check" else "text")
    verb = ns.verb
    if verb == "check":
        targets = ns.args or list(TARGETS)
        bad = [t for t in targets if t not in TARGETS]
        if bad:
            raise UsageError(f"unknown check target(s) {bad}; choose from {list(TARGETS)}")
        seed = int(os.environ.get("QCENTER_SEED", "0"))
        rep = run_check(pres, targets, seed=seed)
        if fmt == "json":
            out.write(json.dumps(rep.records, indent=2) + "\n")
        else:
            for r in rep.records:
                line = f"{'PASS' if r['verdict'] else 'FAIL'} {r['claim']} {r['parameters']}"
                if "witness" in r:
                    line += f" witness: {r['witness']}"
                out.write(line + "\n")
        return 0 if rep.ok else 1
    if verb == "normalize":
        if not ns.args:
            raise UsageError("normalize expects at least one EXPR")
        for text in ns.args:
            out.write(_render(parse_expression(text, pres), fmt) + "\n")
        return 0
    if verb == "commutator":
        _need(ns, 2, "two EXPR arguments")
        a, b = (parse_expression(t, pres) for t in ns.args)
        out.write(_render(commutator(a, b), fmt) + "\n")
        return 0
    if verb == "central":
        _need(ns, 1, "one EXPR")
        verdict = is_central(parse_expression(ns.args[0], pres))
        if fmt == "json":
            rec = {"central": verdict.central}
            if not verdict.central:
                g, c = verdict.witness
                rec["witness"] = {"generator": str(g), "commutator": element_to_json(c)}
            out.write(json.dumps(rec) + "\n")
        elif verdict.central:
            out.write("central\n")
        else:
            g, c = verdict.witness
            out.write(f"not central: [X, {g}] = {format_element(c)}\n")
        return 0 if verdict.central else 1
    if verb == "casimir":
        _need(ns, 0, "no arguments")
        if pres.family == SO and pres.m == 3:
            a = casimir_so3(pres)
        elif pres.family == ISO and pres.m == 2:
            a = casimir_iso2(pres)
        else:
            raise UsageError("casimir is available for so:3 and iso:2")
        out.write(_render(a, fmt) + "\n")
        return 0
    if verb == "cn":
        if len(ns.args) not in (1, 2):
            raise UsageError("cn expects LETTER [n]")
        letter = parse_letter(ns.args[0], pres)
        out.write(_render(cn_element(letter, _order(ns, 1), pres), fmt) + "\n")
        return 0
    if verb == "tilde-cn":
        if len(ns.args) not in (1, 2) or pres.family != EPS_SO:
            raise UsageError("tilde-cn expects --algebra eps-so:3 and arguments i [n]")
        try:
            i = int(ns.args[0])
        except ValueError:
            raise UsageError(f"index must be 1, 2 or 3, got {ns.args[0]!r}")
        out.write(_render(tilde_cn(i, _order(ns, 1), pres), fmt) + "\n")
        return 0
    if verb == "contract":
        _need(ns, 1, "one EXPR")
        if pres.family != EPS_SO:
            raise UsageError("contract expects --algebra eps-so:3")
        out.write(_render(contract_to_iso2(parse_expression(ns.args[0], pres)), fmt) + "\n")
        return 0
    raise UsageError(f"unknown verb {verb}")


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_intermixed_args(argv)  # exits with status 2 on usage errors
    stream = open(ns.out, "w") if ns.out else sys.stdout
    try:
        return run(ns, stream)
    except (UsageError, QCenterError, ValueError) as exc:
        print(f"qcenter: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if ns.out:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
