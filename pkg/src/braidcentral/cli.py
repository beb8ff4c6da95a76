"""Command line front end.

Every verb builds a plain dict report.  ``--json`` prints it canonically
(sorted keys, fixed separators), otherwise it is rendered as indented text.
Braid words inside reports are always written as ``Bn: e1 e2 ...`` so they
can be pasted back in.  :func:`verify_report` re-checks a report using
nothing but its own contents.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .bkl import bkl_normal_form
from .centralizer import (DEFAULT_BUDGET, DEFAULT_ROOT_CAP, bound_p,
                          centralizer_gens)
from .classify import (ConjugacySearchFailed, Periodic, PseudoAnosov,
                       class_as_dict, classify, periodic_representative)
from .core import (BraidError, BraidWord, ParseError, StrandMismatch,
                   conjugate, format_word, parse_word)
from .curves import RoundMulticurve, is_invariant
from .garside import commutes, nf_equal, normal_form
from .sss import DEFAULT_SSS_CAP, BudgetExceeded, are_conjugate, super_summit_set
from .tubular import decompose, regular_form_of

SCHEMA = 1

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2

BINARY = ("equal", "conj")


class PartialResult(Exception):
    """Raised by a verb that ran out of budget but still has something to report."""

    def __init__(self, result: dict):
        super().__init__("budget exhausted")
        self.result = result


@dataclass
class Options:
    sss_cap: int = DEFAULT_SSS_CAP
    budget: int = DEFAULT_BUDGET
    root_cap: int = DEFAULT_ROOT_CAP


@dataclass
class Report:
    verb: str
    inputs: list[str]
    result: dict = field(default_factory=dict)
    status: str = "ok"
    error: str | None = None
    seconds: float | None = None

    def as_dict(self) -> dict:
        out = {"schema": SCHEMA, "verb": self.verb, "input": self.inputs,
               "status": self.status, "result": self.result}
        if self.error is not None:
            out["error"] = self.error
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _w(x: BraidWord) -> str:
    return format_word(x)


def _nf_report(nf) -> dict:
    d = nf.as_dict()
    d["word"] = _w(nf.to_word())
    return d


# -- verbs ------------------------------------------------------------------

def do_nf(w: BraidWord, opt: Options) -> dict:
    return _nf_report(normal_form(w))


def do_bkl_nf(w: BraidWord, opt: Options) -> dict:
    return _nf_report(bkl_normal_form(w))


def do_equal(a: BraidWord, b: BraidWord, opt: Options) -> dict:
    return {"equal": nf_equal(a, b)}


def do_conj(a: BraidWord, b: BraidWord, opt: Options) -> dict:
    c = are_conjugate(a, b, opt.sss_cap)
    if c is None:
        return {"conjugate": False}
    return {"conjugate": True, "conjugator": _w(c)}


def do_sss(w: BraidWord, opt: Options) -> dict:
    s = super_summit_set(w, opt.sss_cap)
    return {"inf": s.inf, "length": s.length, "size": len(s),
            "elements": [{"nf": e.nf.as_dict(), "word": _w(e.nf.to_word()),
                          "conjugator": _w(e.conjugator)} for e in s.elements]}


def do_classify(w: BraidWord, opt: Options) -> dict:
    c = classify(w, opt.sss_cap)
    d = class_as_dict(c)
    for key in ("conjugator", "rounding_conjugator"):
        if key in d:
            d[key] = _w(BraidWord(w.n, tuple(d[key])))
    return d


def do_reduce(w: BraidWord, opt: Options) -> dict:
    c = classify(w, opt.sss_cap)
    if isinstance(c, (Periodic, PseudoAnosov)):
        return {"class": c.tag, "reducible": False}
    d = decompose(w, c.reduction, c.rounding_conjugator)
    return {"class": c.tag, "reducible": True,
            "curves": [list(iv) for iv in c.reduction.sorted()],
            "crs_exact": c.crs_exact,
            "rounding_conjugator": _w(c.rounding_conjugator),
            "rounded": _w(d.base),
            "tubes": [list(t) for t in d.tubes],
            "tubular": _w(d.tubular),
            "interiors": [_w(x) for x in d.interiors]}


def do_regular_form(w: BraidWord, opt: Options) -> dict:
    c = classify(w, opt.sss_cap)
    if isinstance(c, (Periodic, PseudoAnosov)):
        return {"class": c.tag, "reducible": False}
    rf = regular_form_of(w, c.reduction, c.rounding_conjugator, opt.sss_cap)
    d = rf.decomposition
    return {"class": c.tag, "reducible": True,
            "curves": [list(iv) for iv in c.reduction.sorted()],
            "conjugator": _w(rf.conjugator),
            "braid": _w(rf.braid),
            "tubes": [list(t) for t in d.tubes],
            "orbits": [[p + 1 for p in o] for o in d.orbits],
            "tubular": _w(d.tubular),
            "nontrivial": [_w(x) for x in rf.nontrivial]}


def do_centralizer(w: BraidWord, opt: Options) -> dict:
    gs = centralizer_gens(w, opt.sss_cap, opt.budget, opt.root_cap)
    out = {"bound": gs.bound, "count": len(gs), "complete": gs.complete,
           "generators": [{"word": _w(g.word), "tag": g.tag} for g in gs.gens],
           "notes": list(gs.notes)}
    if gs.budget_exhausted:
        raise PartialResult(out)
    return out


def do_bound(arg: str, opt: Options) -> dict:
    text = arg.strip()
    n = int(text) if text.isdigit() else parse_word(text).n
    return {"n": n, "bound": bound_p(n)}


VERBS = {
    "nf": do_nf, "bkl-nf": do_bkl_nf, "equal": do_equal, "conj": do_conj,
    "sss": do_sss, "classify": do_classify, "reduce": do_reduce,
    "regular-form": do_regular_form, "centralizer": do_centralizer, "bound": do_bound,
}


def run_one(verb: str, inputs: list[str], opt: Options, timing: bool = False) -> Report:
    rep = Report(verb, [s.strip() for s in inputs])
    t0 = time.perf_counter()
    try:
        if verb == "bound":
            rep.result = do_bound(inputs[0], opt)
        else:
            words = [parse_word(s) for s in inputs]
            if len(words) == 2 and words[0].n != words[1].n:
                raise StrandMismatch(f"B{words[0].n} vs B{words[1].n}")
            rep.result = VERBS[verb](*words, opt)
    except PartialResult as exc:
        rep.status, rep.result, rep.error = "budget", exc.result, "budget exhausted"
    except (BudgetExceeded, ConjugacySearchFailed) as exc:
        rep.status, rep.error = "budget", str(exc)
    except (ParseError, BraidError, ValueError) as exc:
        rep.status, rep.error = "input-error", f"{type(exc).__name__}: {exc}"
    if timing:
        rep.seconds = time.perf_counter() - t0
    return rep


# -- self-verification ------------------------------------------------------

def verify_report(rep: dict) -> bool:
    """Re-run the certificate checks of a report using only its contents."""
    if rep.get("status") != "ok":
        return rep.get("status") in ("budget", "input-error")
    verb, res = rep["verb"], rep["result"]
    if verb == "bound":
        return res["bound"] == bound_p(res["n"])
    ws = [parse_word(s) for s in rep["input"]]
    w = ws[0]
    if verb in ("nf", "bkl-nf"):
        return nf_equal(w, parse_word(res["word"]))
    if verb == "equal":
        return res["equal"] == nf_equal(ws[0], ws[1])
    if verb == "conj":
        if not res["conjugate"]:
            return True  # a negative answer carries no witness
        return nf_equal(conjugate(ws[0], parse_word(res["conjugator"])), ws[1])
    if verb == "sss":
        return all(nf_equal(conjugate(w, parse_word(e["conjugator"])), parse_word(e["word"]))
                   for e in res["elements"])
    if verb == "classify" or (verb in ("reduce", "regular-form") and not res.get("reducible", True)):
        if res["class"] == "periodic":
            target = periodic_representative(w.n, res["kind"], res["k"])
            return nf_equal(conjugate(w, parse_word(res["conjugator"])), target)
        if res["class"] == "reducible":
            x = conjugate(w, parse_word(res["rounding_conjugator"]))
            return is_invariant(x, RoundMulticurve.of(w.n, res["curves"]))
        return True
    if verb == "reduce":
        x = conjugate(w, parse_word(res["rounding_conjugator"]))
        return (nf_equal(x, parse_word(res["rounded"]))
                and is_invariant(x, RoundMulticurve.of(w.n, res["curves"])))
    if verb == "regular-form":
        return nf_equal(conjugate(w, parse_word(res["conjugator"])), parse_word(res["braid"]))
    if verb == "centralizer":
        gens = [parse_word(g["word"]) for g in res["generators"]]
        return all(commutes(g, w) for g in gens) and len(gens) <= res["bound"] == bound_p(w.n)
    return False


# -- rendering --------------------------------------------------------------

def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _render(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    else:
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or
                                       (isinstance(x, list) and all(isinstance(y, int) for y in x))
                                       for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return json.dumps(v)
    return str(v)


def render_text(rep: dict) -> str:
    return "\n".join(_render(rep))


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidcentral",
                                description="Normal forms, conjugacy, classification and centralizers of braids.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("braids", nargs="*",
                   help="braids as 'Bn: e1 e2 ...'; read from stdin, one per line, when omitted")
    p.add_argument("--json", action="store_true", help="print canonical JSON")
    p.add_argument("--sss-cap", type=int, default=DEFAULT_SSS_CAP,
                   help="largest super summit set to build (default %(default)s)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="search budget for periodic companions (default %(default)s)")
    p.add_argument("--root-cap", type=int, default=DEFAULT_ROOT_CAP,
                   help="node cap for root searches (default %(default)s)")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to each report")
    return p


def _batches(verb: str, items: list[str]) -> list[list[str]]:
    arity = 2 if verb in BINARY else 1
    if len(items) % arity:
        raise ValueError(f"{verb} takes braids in groups of {arity}")
    return [items[i:i + arity] for i in range(0, len(items), arity)]


def run(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    opt = Options(args.sss_cap, args.budget, args.root_cap)
    items = args.braids or [ln for ln in stdin.read().splitlines() if ln.strip()]
    try:
        batches = _batches(args.verb, items)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not batches:
        print("error: no input", file=sys.stderr)
        return EXIT_INPUT
    code = EXIT_OK
    for group in batches:
        rep = run_one(args.verb, group, opt, args.timing).as_dict()
        if rep["status"] == "input-error":
            code = code or EXIT_INPUT
        elif rep["status"] == "budget":
            code = EXIT_BUDGET
        print(to_json(rep) if args.json else render_text(rep), file=stdout)
        if not args.json and len(batches) > 1:
            print(file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
