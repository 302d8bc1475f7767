"""Command dispatch and deterministic plain-text reports.

Exit codes: 0 ok, 1 mathematical identity failure, 2 input error.
"""

from __future__ import annotations

import sys

from . import battery as battery_mod
from . import comrings, galg, points as pts, weyl
from .deck import parse_deck
from .errors import InputError, MathIdentityError, WorkbenchError

USAGE = """usage: weylbench --deck FILE [--cap N] [--mode closure|rational] COMMAND ...

commands:
  check
  support GRADING
  universal GRADING
  weyl GRADING [over FIELD]
  points GRADING over RING set=aut|stab|autgamma|diag
  member MAP in GRADING set=aut|stab|diag|autGamma|centDiag|normDiag|dGnorm
  idempotents RING
  ses GRADING [over FIELD]
  verify-theorem GRADING over RING
"""

WARN_NONSMOOTH = ("WARN diagonal scheme has infinitesimal points in this "
                  "characteristic; its rational-point normalizer can differ "
                  "from the naive normalizer of rational points")


class Report:
    def __init__(self):
        self.lines = []
        self.code = 0

    def add(self, line):
        self.lines.append(line)

    def kv(self, key, value):
        self.lines.append("%s=%s" % (key, value))

    def text(self):
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def run_command(deck, tokens, cap=10**8, mode=None):
    report = Report()
    if not tokens:
        raise InputError("missing command")
    cmd, args = tokens[0], tokens[1:]
    handlers = {
        "check": _cmd_check,
        "support": _cmd_support,
        "universal": _cmd_universal,
        "weyl": _cmd_weyl,
        "points": _cmd_points,
        "member": _cmd_member,
        "idempotents": _cmd_idempotents,
        "ses": _cmd_ses,
        "verify-theorem": _cmd_verify,
    }
    if cmd not in handlers:
        raise InputError("unknown command %r" % cmd)
    handlers[cmd](deck, args, report, cap, mode)
    return report


def _grading_arg(deck, args, report_idx=0):
    if not args:
        raise InputError("missing grading name")
    name = args[report_idx]
    if name not in deck.gradings:
        raise InputError("unknown grading %r" % name)
    return deck.gradings[name]


def _over_field(deck, args):
    """Handle a trailing `over FIELD`; returns field or None."""
    if "over" in args:
        idx = args.index("over")
        fname = args[idx + 1] if idx + 1 < len(args) else None
        if fname is None or fname not in deck.fields:
            raise InputError("unknown field after over")
        return deck.fields[fname]
    return None


def _cmd_check(deck, args, report, cap, mode):
    report.kv("ok", "true")
    report.kv("fields", len(deck.fields))
    report.kv("groups", len(deck.groups))
    report.kv("rings", len(deck.rings))
    report.kv("algebras", len(deck.algebras))
    report.kv("gradings", len(deck.gradings))
    report.kv("maps", len(deck.maps))


def _cmd_support(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    report.kv("support.size", len(gr.support))
    report.kv("support", ";".join(gr.group.element_str(g) for g in gr.support))


def _cmd_universal(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    uni = galg.universal_group(gr)
    report.kv("U", uni.group.group_str())


def _cmd_weyl(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    fld = _over_field(deck, args)
    rational = fld is not None or mode == "rational"
    if rational:
        if fld is not None:
            gr = galg.grading_over(gr, fld)
        group = weyl.weyl_over_field(gr, cap=cap)
        report.kv("weyl.mode", "rational")
    else:
        group = weyl.weyl_closure(gr)
        report.kv("weyl.mode", "closure")
    report.kv("weyl.order", group.order)
    report.kv("weyl.generators", group.generators_str())


def _aligned(deck, gr, ring):
    if gr.algebra.field == ring.field:
        return gr
    return galg.grading_over(gr, ring.field)


def _ring_arg(deck, args):
    if "over" not in args:
        raise InputError("missing over RING")
    idx = args.index("over")
    rname = args[idx + 1] if idx + 1 < len(args) else None
    if rname is None or rname not in deck.rings:
        raise InputError("unknown ring after over")
    return deck.rings[rname]


def _set_arg(args, allowed):
    for a in args:
        if a.startswith("set="):
            val = a[4:]
            if val not in allowed:
                raise InputError("set must be one of %s" % "|".join(sorted(allowed)))
            return val
    raise InputError("missing set=...")


def _cmd_points(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    ring = _ring_arg(deck, args)
    which = _set_arg(args, {"aut", "stab", "autgamma", "diag"})
    gr = _aligned(deck, gr, ring)
    if which == "diag":
        plist = pts.diag_points(gr, ring, cap=cap)
    else:
        plist = pts.enumerate_points(gr, ring, which, cap=cap)
    report.kv("points.count", len(plist))
    for i, p in enumerate(plist):
        report.kv("point.%d" % i, p.to_str())


def _cmd_member(deck, args, report, cap, mode):
    if not args or args[0] not in deck.maps:
        raise InputError("unknown map name")
    phi = deck.maps[args[0]]
    gr_name = args[args.index("in") + 1] if "in" in args else None
    if gr_name is None or gr_name not in deck.gradings:
        raise InputError("missing in GRADING")
    gr = deck.gradings[gr_name]
    gr = _aligned(deck, gr, phi.ring)
    if gr.algebra.table != phi.algebra.table:
        raise InputError("map and grading algebras differ")
    gr = galg.Grading(phi.algebra, gr.group, gr.degrees, label=gr.label)
    which = _set_arg(args, {"aut", "stab", "diag", "autGamma",
                            "centDiag", "normDiag", "dGnorm"})
    R = phi.ring
    if which == "aut":
        report.kv("member", str(pts.automorphism_membership(phi)).lower())
    elif which == "stab":
        report.kv("member", str(pts.stab_membership(gr, phi)).lower())
    elif which == "diag":
        res = pts.diag_membership(gr, phi)
        report.kv("member", str(res.member).lower())
        if res.member:
            for g in gr.support:
                report.add("scalar %s=%s" % (gr.group.element_str(g),
                                             R.to_str(res.scalars[g])))
    elif which == "autGamma":
        ok = pts.autgamma_membership(gr, phi)
        report.kv("member", str(ok).lower())
        if ok:
            cert = pts.block_permutations(gr, phi)
            _emit_block_certs(report, gr, R, cert.certificates)
    elif which == "centDiag":
        report.kv("member", str(pts.cent_membership_generic(gr, phi)).lower())
    elif which == "normDiag":
        res = pts.norm_membership_generic(gr, phi)
        report.kv("member", str(res.member).lower())
        if res.member:
            for i, (e, shift) in enumerate(res.shifts):
                pairs = ",".join("%s->%s" % (gr.group.element_str(g),
                                             gr.group.element_str(shift[g]))
                                 for g in gr.support)
                report.add("block e%d shift=(%s)" % (i, pairs))
            if not pts.stab_membership(gr, phi) and battery_mod.diag_scheme_nonsmooth(gr):
                report.add(WARN_NONSMOOTH)
    elif which == "dGnorm":
        res = pts.dgroup_norm_membership(gr, phi)
        if res.status == "indeterminate":
            report.kv("member", "indeterminate")
        else:
            report.kv("member", "true" if res.status == "member" else "false")
            for h in gr.support:
                report.add("forced %s=%s" % (gr.group.element_str(h),
                                             gr.group.element_str(res.forced[h])))
            if res.status == "nonmember":
                report.kv("relation", "(%s)" % ",".join(str(c) for c in res.relation))
                report.kv("relation.value",
                          gr.group.element_str(res.relation_value))


def _emit_block_certs(report, gr, R, certs):
    supp = list(gr.support)
    index = {g: i for i, g in enumerate(supp)}
    for i, (e, sigma) in enumerate(certs):
        perm = tuple(index[sigma[g]] for g in supp)
        pg = weyl.PermGroup(tuple(supp), (perm,), (perm,))
        report.add("block e%d perm=%s" % (i, pg.perm_str(perm)))


def _cmd_idempotents(deck, args, report, cap, mode):
    if not args or args[0] not in deck.rings:
        raise InputError("unknown ring name")
    R = deck.rings[args[0]]
    idems = R.idempotents()
    report.kv("idempotents.count", len(idems))
    for i, e in enumerate(idems):
        report.kv("idempotent.%d" % i, R.to_str(e))


def _cmd_ses(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    fld = _over_field(deck, args)
    if fld is not None:
        gr = galg.grading_over(gr, fld)
    res = weyl.ses_check(gr, cap=cap)
    report.kv("ses.aut", res.aut_count)
    report.kv("ses.stab", res.stab_count)
    report.kv("ses.weyl.order", res.weyl_order)
    report.kv("ses.identity", "ok" if res.product_ok else "FAIL")
    report.kv("ses.weyl_in_closure", "ok" if res.weyl_in_closure else "FAIL")
    if not (res.product_ok and res.weyl_in_closure):
        raise MathIdentityError("exact sequence check failed at points")


def _cmd_verify(deck, args, report, cap, mode):
    gr = _grading_arg(deck, args)
    ring = _ring_arg(deck, args)
    gr = _aligned(deck, gr, ring)
    res = battery_mod.theorem_battery(gr, ring)
    report.kv("points.mode", res.mode)
    report.kv("points.count", res.distinct_points)
    report.add("cent==stab: ok (%d/%d)" % (res.cent_checked, res.distinct_points))
    report.add("norm==autGamma: ok (%d/%d)" % (res.norm_checked, res.distinct_points))
    if res.warn_nonsmooth:
        report.add(WARN_NONSMOOTH)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    flags = {"cap": 10**8, "mode": None, "deck": None, "report": "plain"}
    tokens = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--"):
            key = tok[2:]
            if key not in flags:
                print("error=input: unknown flag %s" % tok)
                return 2
            if i + 1 >= len(argv):
                print("error=input: flag %s needs a value" % tok)
                return 2
            flags[key] = argv[i + 1]
            i += 2
        else:
            tokens.append(tok)
            i += 1
    if flags["report"] != "plain":
        print("error=input: only the plain report format exists")
        return 2
    if not tokens:
        print(USAGE.rstrip())
        return 2
    try:
        if flags["deck"] is None:
            raise InputError("missing --deck FILE")
        with open(flags["deck"], "r", encoding="utf-8") as fh:
            deck = parse_deck(fh.read())
        report = run_command(deck, tokens, cap=int(flags["cap"]),
                             mode=flags["mode"])
    except MathIdentityError as exc:
        print("error=identity: %s" % exc)
        return 1
    except InputError as exc:
        print("error=input: %s" % exc)
        return 2
    except WorkbenchError as exc:
        print("error=input: %s" % exc)
        return 2
    except OSError as exc:
        print("error=input: %s" % exc)
        return 2
    sys.stdout.write(report.text())
    return report.code


if __name__ == "__main__":
    sys.exit(main())
