"""Command-line front end: ``hyperalg <command> ...``.

Exit codes: 0 when every check passes, 1 on a semantic failure (axiom
violated, theorem counterexample, unmet hypothesis, budget refusal), 2 on
usage or parse errors.
"""

import argparse
import sys

from . import census, hlinalg, theorems
from .axioms import (
    DISTRIBUTIVE_MODES, EQUAL, check_hyperfield, check_hypergroup, check_hypervectorspace,
)
from .constructions import builtin_hyperfield, product_space
from .core import mask_of
from .errors import BudgetExceeded, HyperalgError, PreconditionError, StructureError
from .hypfile import (
    HVSPACE, HYPERFIELD, HYPERGROUP, ParseError, StructureFile, census_file, field_block, parse,
    render, space_block,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Out:
    """Collects report lines in either text or tab-separated machine form."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []

    def record(self, text: str, *fields):
        self.lines.append("\t".join(map(str, fields)) if self.fmt == "machine" else text)

    def emit(self, stream):
        for line in self.lines:
            stream.write(line + "\n")


# ---------------------------------------------------------------------------
# loading


def _load(path) -> StructureFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


class Session:
    """A parsed file plus validated structures, built on demand."""

    def __init__(self, sf: StructureFile, distributive: str):
        self.sf = sf
        self.distributive = distributive
        self._fields = {}
        self._spaces = {}

    def block(self, name):
        try:
            return self.sf.get(name)
        except KeyError:
            raise UsageError(f"no structure named {name!r} (have: {', '.join(self.sf.names)})") from None

    def field_report(self, name):
        if name not in self._fields:
            b = self.block(name)
            self._fields[name] = check_hyperfield(b.add, b.mul, b.zero, b.one, self.distributive)
        return self._fields[name]

    def space_report(self, name):
        if name not in self._spaces:
            b = self.block(name)
            frep = self.field_report(b.field_name)
            if not frep.ok:
                self._spaces[name] = None
            else:
                self._spaces[name] = check_hypervectorspace(frep.structure, b.vectors, b.vadd,
                                                            b.action, b.theta)
        return self._spaces[name]

    def space(self, name):
        b = self.block(name)
        if b.kind != HVSPACE:
            raise UsageError(f"{name!r} is a {b.kind}, not an hvspace")
        rep = self.space_report(name)
        if rep is None:
            raise PreconditionError(f"hyperfield {b.field_name!r} of {name!r} fails its axioms")
        if not rep.ok:
            f = rep.first_failure
            raise PreconditionError(f"{name!r} is not a hypervector space: {f}")
        return rep.structure


def _pick_space(session, name):
    if name:
        return name, session.space(name)
    spaces = [b.name for b in session.sf.blocks if b.kind == HVSPACE]
    if len(spaces) != 1:
        raise UsageError("pass --structure NAME to choose an hvspace block")
    return spaces[0], session.space(spaces[0])


def _vectors(space, names):
    out = []
    for n in names or ():
        if n not in space.vectors.names:
            raise UsageError(f"unknown vector {n!r}")
        out.append(space.vectors.names.index(n))
    return out


def _members(space, mask):
    return [space.vectors.names[i] for i in range(space.size) if mask >> i & 1]


# ---------------------------------------------------------------------------
# commands


def _report_lines(out, name, report):
    for r in report.results:
        status = "PASS" if r.ok else "FAIL"
        w = "" if r.witness is None else "witness=" + ",".join(map(str, r.witness))
        text = f"{name} {r.axiom} {status}" + (f" {w}" if w else "") + (f" {r.detail}" if not r.ok and r.detail else "")
        out.record(text, name, r.axiom, status, w, r.detail if not r.ok else "")
    return report.ok


def cmd_check(args, session, out):
    names = [args.structure] if args.structure else session.sf.names
    ok = True
    for name in names:
        b = session.block(name)
        if b.kind == HYPERGROUP:
            rep = check_hypergroup(b.op)
            ok &= _report_lines(out, name, rep)
            if rep.ok:
                out.record(f"{name} class commutative={'yes' if rep.is_commutative else 'no'}",
                           name, "class", "commutative" if rep.is_commutative else "non-commutative")
        elif b.kind == HYPERFIELD:
            ok &= _report_lines(out, name, session.field_report(name))
        else:
            rep = session.space_report(name)
            if rep is None:
                out.record(f"{name} field FAIL hyperfield {b.field_name} is invalid",
                           name, "field", "FAIL", b.field_name, "")
                ok = False
                continue
            ok &= _report_lines(out, name, rep)
            if rep.ok:
                s = rep.structure
                flags = {"strong_right": s.strong_right, "strong_left": s.strong_left, "good": s.good}
                text = " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items())
                out.record(f"{name} class {text}", name, "class",
                           *[f"{k}={int(v)}" for k, v in flags.items()])
    return OK if ok else FAILED


def cmd_span(args, session, out):
    name, space = _pick_space(session, args.structure)
    vecs = _vectors(space, args.vectors)
    mask = hlinalg.span(space, vecs, strict=not args.allow_weak)
    mem = _members(space, mask)
    out.record("{ " + " ".join(mem) + " }", "span", name, *mem)
    return OK


def cmd_closure(args, session, out):
    name, space = _pick_space(session, args.structure)
    mask = hlinalg.subspace_closure(space, mask_of(_vectors(space, args.vectors)))
    mem = _members(space, mask)
    out.record("{ " + " ".join(mem) + " }", "closure", name, *mem)
    return OK


def cmd_depend(args, session, out):
    name, space = _pick_space(session, args.structure)
    vecs = _vectors(space, args.vectors)
    w = hlinalg.is_dependent(space, vecs)
    if w is None:
        out.record("independent", "depend", name, "independent")
    else:
        coeffs = [space.field.names[c] for c in w.coeffs]
        out.record("dependent coeffs=(" + " ".join(coeffs) + ")", "depend", name, "dependent", *coeffs)
    return OK


def _within(space, names):
    if not names:
        return None
    mask = mask_of(_vectors(space, names))
    return mask


def cmd_basis(args, session, out):
    name, space = _pick_space(session, args.structure)
    basis = hlinalg.extend_to_basis(space, _vectors(space, args.vectors),
                                    within=_within(space, args.within), strict=not args.allow_weak)
    names = space.names_of(basis)
    out.record(f"basis ({' '.join(names)}) dim={basis.dim}", "basis", name, basis.dim, *names)
    return OK


def cmd_dim(args, session, out):
    name, space = _pick_space(session, args.structure)
    d = hlinalg.dimension(space, within=_within(space, args.within), strict=not args.allow_weak)
    out.record(f"dim={d}", "dim", name, d)
    return OK


def cmd_sum(args, session, out):
    name, space = _pick_space(session, args.structure)
    w1 = mask_of(_vectors(space, args.w1))
    w2 = mask_of(_vectors(space, args.w2))
    total = hlinalg.sum_subspaces(space, w1, w2)
    direct = hlinalg.is_direct_sum(space, w1, w2)
    mem = _members(space, total)
    out.record("{ " + " ".join(mem) + " }" + f" direct={'yes' if direct else 'no'}",
               "sum", name, "direct" if direct else "not-direct", *mem)
    return OK


def cmd_verify(args, session, out):
    suites = theorems.SUITES if args.suite == "all" else (args.suite,)
    names = [args.structure] if args.structure else session.sf.names
    verdicts = []
    ok = True
    for name in names:
        b = session.block(name)
        if b.kind in (HYPERGROUP, HYPERFIELD) and "laws" in suites:
            table = b.op if b.kind == HYPERGROUP else b.add
            rep = check_hypergroup(table)
            valid = rep.ok if b.kind == HYPERGROUP else session.field_report(name).ok
            if not valid:
                out.record(f"{name} invalid structure; theorems not run", name, "invalid")
                ok = False
                continue
            verdicts += theorems.verify_hypergroup_laws(table, name)
        elif b.kind == HVSPACE:
            try:
                space = session.space(name)
            except PreconditionError as e:
                out.record(f"{name} invalid structure; theorems not run ({e})", name, "invalid")
                ok = False
                continue
            verdicts += theorems.verify_space(space, name, suites)
    for v in verdicts:
        out.lines.append(v.render(args.format))
    if any(v.failed for v in verdicts):
        ok = False
    return OK if ok else FAILED


def cmd_enumerate(args, session, out):
    entries = census.enumerate_structures(args.kind, args.order, commutative=args.commutative,
                                          jobs=args.jobs, budget=args.budget)
    kind = census.COMMUTATIVE_HYPERGROUP if (args.kind == census.HYPERGROUP and args.commutative) else args.kind
    out.lines.extend(render(census_file(kind, args.order, entries)).splitlines())
    return OK


def cmd_builtin(args, session, out):
    F = builtin_hyperfield(args.name)
    sf = StructureFile(blocks=[field_block(args.name, F)])
    if args.power:
        space = product_space(F, args.power)
        sf.blocks.append(space_block(f"{args.name}^{args.power}", args.name, space))
    out.lines.extend(render(sf).splitlines())
    return OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperalg", description="Finite hyperstructures and hypervector spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "machine"), default="text")

    filed = argparse.ArgumentParser(add_help=False, parents=[shared])
    filed.add_argument("file", help=".hyp structure file")
    filed.add_argument("--structure", "--space", dest="structure", help="block name")
    filed.add_argument("--distributive", choices=DISTRIBUTIVE_MODES, default=EQUAL)
    filed.add_argument("--allow-weak", action="store_true",
                       help="compute spans/bases without requiring strong left distributivity")

    sub.add_parser("check", parents=[filed], help="validate every (or one) block")
    for name, helptext in (("span", "union of all linear combinations"),
                           ("closure", "smallest subspace containing the vectors"),
                           ("depend", "linear dependence with a witness")):
        sp = sub.add_parser(name, parents=[filed], help=helptext)
        sp.add_argument("--vectors", nargs="+", required=name != "closure", default=[])
    sp = sub.add_parser("basis", parents=[filed], help="extend vectors to a basis")
    sp.add_argument("--vectors", nargs="*", default=[])
    sp.add_argument("--within", nargs="+", help="members of a subspace to stay inside")
    sp = sub.add_parser("dim", parents=[filed], help="dimension of the space or a subspace")
    sp.add_argument("--within", nargs="+", help="members of a subspace")
    sp = sub.add_parser("sum", parents=[filed], help="linear sum of two subspaces")
    sp.add_argument("--w1", nargs="+", required=True)
    sp.add_argument("--w2", nargs="+", required=True)
    sp = sub.add_parser("verify", parents=[filed], help="run the theorem harness")
    sp.add_argument("--suite", choices=theorems.SUITES + ("all",), default="all")

    sp = sub.add_parser("enumerate", parents=[shared], help="census of small structures")
    sp.add_argument("--kind", choices=census.KINDS, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--commutative", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=float, default=None,
                    help="search-space cap (default from HYPERALG_BUDGET or built in)")

    sp = sub.add_parser("builtin", parents=[shared], help="print a built-in hyperfield as a .hyp file")
    sp.add_argument("name", help="K2, S3 or GFp(p)")
    sp.add_argument("--power", type=int, default=0, help="also emit the product space F^n")
    return p


COMMANDS = {
    "check": cmd_check, "span": cmd_span, "closure": cmd_closure, "depend": cmd_depend,
    "basis": cmd_basis, "dim": cmd_dim, "sum": cmd_sum, "verify": cmd_verify,
    "enumerate": cmd_enumerate, "builtin": cmd_builtin,
}


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    out = Out(args.format)
    try:
        session = Session(_load(args.file), args.distributive) if hasattr(args, "file") else None
        code = COMMANDS[args.command](args, session, out)
    except (ParseError, UsageError) as e:
        stderr.write(f"hyperalg: error: {e}\n")
        return USAGE
    except BudgetExceeded as e:
        stderr.write(f"hyperalg: {e}\n")
        return FAILED
    except StructureError as e:
        # bad built-in names, out-of-range sizes and the like
        stderr.write(f"hyperalg: error: {e}\n")
        return USAGE
    except (PreconditionError, HyperalgError) as e:
        out.emit(stdout)
        stderr.write(f"hyperalg: {e}\n")
        return FAILED
    out.emit(stdout)
    return code


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
