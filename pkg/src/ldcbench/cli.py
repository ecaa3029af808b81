"""Command line front-end.

    ldcbench validate --builtin finrel:2
    ldcbench laws cldc --builtin bdl:chain:1
    ldcbench classify --builtin finrel --max-size 2 --format json
    ldcbench construct sz --builtin bdl:boolean:2 --out sz.json
    ldcbench diff a.json b.json --functor f.json

Exit codes: 0 all pass, 1 a law failed, 2 bad input, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cldc import DeltaSearchFailed, LawFailure
from .fincat import (BudgetExceeded, CategoryError, HardFailure, LawCheck, LawReport,
                     TableCategory, obj_label, summarize, tabulate,
                     validate_category)

JOBS_ENV = "LDCBENCH_JOBS"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("ldc", "sldc", "cldc", "duoidal", "appendix")
CONSTRUCTIONS = ("bdl", "semiadd", "sz", "slice", "coslice", "product", "grothendieck",
                 "kleisli", "wedge")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    builtin: str | None = None
    file: str | None = None
    max_size: int | None = None
    bound: int = 12
    suite: str | None = None
    kind: str | None = None
    fmt: str = "text"
    jobs: int = 1
    seed: int = 0
    out: str | None = None
    second: str | None = None
    lattice: str | None = None
    functor: str | None = None
    left: str | None = None
    right: str | None = None

    def __post_init__(self):
        if self.bound < 1:
            raise InputError("--bound must be at least 1")
        if self.jobs < 1:
            raise InputError("--jobs must be at least 1")


# ---------------------------------------------------------------- instances

class Instance:
    """Lazily built views of one named instance: engine, bicartesian
    structure, LDC and CLDC, whichever apply."""

    def __init__(self, label, cat=None, X=None, ldc=None, cldc=None, smc=None,
                 cldc_error=None, extra=None):
        self.label = label
        if X is None and cldc is not None:
            X = cldc.X
        self.cat = cat if cat is not None else (X.cat if X is not None else None)
        self.X = X
        self.ldc = ldc if ldc is not None else (cldc.ldc if cldc is not None else None)
        self.cldc = cldc
        self.smc = smc
        self.cldc_error = cldc_error
        self.extra = list(extra or [])


def _size(arg, default, cfg):
    if cfg.max_size is not None:
        return cfg.max_size
    if arg in (None, ""):
        return default
    try:
        return int(arg)
    except ValueError:
        raise InputError(f"size must be an integer, got {arg!r}") from None


def _lattices(spec):
    from .construct import FiniteBDL, LatticeError
    from .zoo import bdl_generators
    if os.path.exists(spec):
        try:
            return [FiniteBDL.load(spec)]
        except json.JSONDecodeError as e:
            raise InputError(f"{spec}: line {e.lineno}: {e.msg}") from None
        except LatticeError as e:
            raise InputError(f"{spec}: {e}") from None
    try:
        return bdl_generators(spec)
    except LatticeError as e:
        raise InputError(str(e)) from None


def resolve_builtin(name, cfg):
    from . import construct as K
    from . import zoo as Z
    head, _, rest = name.partition(":")
    b = cfg.bound
    if head == "finset":
        C = Z.make_finset(_size(rest, 2, cfg))
        X = Z.finset_bicartesian(C)
        return Instance(name, X=X)
    if head == "finpar":
        C = Z.make_finpar(_size(rest, 2, cfg))
        X = Z.finpar_bicartesian(C)
        return Instance(name, X=X, ldc=Z.finpar_direct_ldc(C, X), smc=Z.finpar_smc(C, X))
    if head in ("finrel", "semiadd"):
        if head == "semiadd":
            base, _, rest = rest.partition(":")
            if base != "finrel":
                raise InputError(f"semiadd needs a finrel base, got {base!r}")
        C = Z.make_finrel(_size(rest, 2, cfg))
        return Instance(name, cldc=K.semiadditive_to_cldc(Z.finrel_bicartesian(C), bound=b))
    if head == "bdl":
        Ls = _lattices(rest)
        if len(Ls) != 1:
            raise InputError(f"{name!r} names {len(Ls)} lattices; pick one")
        return Instance(name, cldc=K.bdl_to_cldc(Ls[0], bound=b))
    if head == "kleisli":
        base, _, rest = rest.partition(":")
        if base != "finset":
            raise InputError(f"kleisli needs a finset base, got {base!r}")
        D = Z.finset_bicartesian(Z.make_finset(_size(rest, 1, cfg)))
        d = K.kleisli_exception(D, bound=b, certify=False)
        return Instance(name, X=d.X, ldc=d.ldc, smc=d.M)
    if head == "wedge":
        base, _, rest = rest.partition(":")
        if base != "finpar":
            raise InputError(f"wedge needs a finpar base, got {base!r}")
        C = Z.make_finpar(_size(rest, 2, cfg))
        M = Z.finpar_smc(C)
        return Instance(name, X=M.X, ldc=K.wedge_construction(M), smc=M)
    if head == "groth":
        which, _, rest = rest.partition(":")
        P, P2 = Z.powerset_functors(_size(rest, 1, cfg))
        F = {"P": P, "P2": P2, "const": None}.get(which, False)
        if F is False:
            raise InputError(f"unknown functor {which!r}; use P, P2 or const")
        if F is None:
            F = K.constant_functor(P.base)
        try:
            S = K.grothendieck(F, bound=b, strict=True)
        except K.LawFailure as e:
            G = K.GrothendieckCategory(F)
            return Instance(name, X=K.grothendieck_bicartesian(F, G), cldc_error=e,
                            extra=e.reports)
        return Instance(name, cldc=S)
    if head == "product":
        left, sep, right = rest.partition("*")
        if not sep:
            raise InputError("product needs two instances joined by '*'")
        A, B = resolve_builtin(left, cfg), resolve_builtin(right, cfg)
        if A.cldc is None or B.cldc is None:
            raise InputError("product factors must be CLDC instances")
        return Instance(name, cldc=K.product_cldc(A.cldc, B.cldc, bound=b))
    raise InputError(f"unknown builtin instance {name!r}")


def load_instance(cfg, which=None):
    from .cldc import load_cldc_file
    path = which if which is not None else cfg.file
    if cfg.builtin and which is None:
        return resolve_builtin(cfg.builtin, cfg)
    if path is None:
        raise InputError("give --builtin NAME or --file PATH")
    if not os.path.exists(path):
        raise InputError(f"{path}: no such file")
    with open(path) as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: line {e.lineno}: {e.msg}") from None
    try:
        if "products" in d:
            return Instance(path, cldc=load_cldc_file(path, bound=cfg.bound, certify=False))
        return Instance(path, cat=TableCategory.from_dict(d, path))
    except (ValueError, KeyError) as e:
        raise InputError(f"{path}: {e}") from None


# ---------------------------------------------------------------- commands

def _parallel(cfg, thunks):
    """Run independent report producers; results keep submission order."""
    if cfg.jobs <= 1 or len(thunks) <= 1:
        return [t() for t in thunks]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as ex:
        return [f.result() for f in [ex.submit(t) for t in thunks]]


def _flatten(parts):
    out = []
    for p in parts:
        out.extend(p if isinstance(p, list) else [p])
    return out


def cmd_validate(cfg, inst):
    if inst.cat is None:
        raise InputError(f"{inst.label} has no underlying category")
    return {"laws": validate_category(inst.cat, cfg.bound)}


def _need_cldc(inst, cfg):
    from .cldc import assemble_cldc
    if inst.cldc is not None:
        return inst.cldc
    if inst.cldc_error is not None:
        raise inst.cldc_error
    if inst.X is None:
        raise InputError(f"{inst.label} has no chosen products and coproducts")
    cats = inst.X.cat
    inst.cldc = assemble_cldc(inst.X, bound=cfg.bound, name=f"cldc({cats.name})")
    return inst.cldc


def _certified_cldc_reports(S, cfg):
    from .cldc import all_reports
    if not S.reports:
        from .ldc import check_ldc_suite
        S.reports = check_ldc_suite(S.ldc, bound=cfg.bound)
        if S.mix is None and not any(r.failed for r in S.reports):
            from .cldc import cldc_mix
            S.mix = cldc_mix(S, bound=cfg.bound)
    return all_reports(S, bound=cfg.bound)


def cmd_laws(cfg, inst):
    from .cldc import duoidal_suite
    from .construct import wedge_suite
    from .ldc import check_distributor_naturality, check_ldc_laws, check_ldc_suite
    from .monoidal import check_monoidal_laws
    suite = cfg.suite
    if suite in ("ldc", "sldc"):
        L = inst.ldc
        if L is None:
            L = _need_cldc(inst, cfg).ldc
        if suite == "sldc":
            return {"laws": check_ldc_suite(L, bound=cfg.bound)}
        parts = _parallel(cfg, [
            lambda: check_monoidal_laws(L.tensor, None, cfg.bound, "tensor"),
            lambda: check_monoidal_laws(L.par, None, cfg.bound, "par"),
            lambda: check_distributor_naturality(L, None, cfg.bound),
            lambda: check_ldc_laws(L, None, cfg.bound)])
        return {"laws": _flatten(parts)}
    if suite == "cldc":
        try:
            S = _need_cldc(inst, cfg)
        except DeltaSearchFailed as e:
            chk = LawCheck(e.law_id or "cldc.delta_search", inst.cat)
            chk.claim(tuple(e.objects or ()), False, [str(e)], ["a linear distributor"])
            return {"laws": inst.extra + [chk.report()], "error": str(e)}
        except LawFailure as e:
            return {"laws": e.reports, "error": str(e)}
        return {"laws": _certified_cldc_reports(S, cfg)}
    if suite == "duoidal":
        S = _need_cldc(inst, cfg)
        return {"laws": duoidal_suite(S, bound=cfg.bound)}
    if suite == "appendix":
        if inst.ldc is None or inst.smc is None:
            raise InputError(f"{inst.label} carries no either-or-both structure")
        reps, mx = wedge_suite(inst.ldc, inst.smc, bound=cfg.bound)
        return {"laws": reps, "mix_kind": None if mx is None else mx.kind}
    raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def cmd_classify(cfg, inst):
    from .collapse import classify, posetal_collapse_suite, semiadditive_collapse_suite
    S = _need_cldc(inst, cfg)
    cl = classify(S, bound=cfg.bound, strict=False)
    parts = _parallel(cfg, [lambda: posetal_collapse_suite(S, strict=False),
                            lambda: semiadditive_collapse_suite(S, strict=False)])
    return {"laws": cl.reports + _flatten(parts), "classification": cl.to_dict()}


def cmd_construct(cfg, inst_fn):
    from . import construct as K
    from .cldc import cldc_to_dict
    kind = cfg.kind
    if kind == "bdl":
        if not cfg.lattice:
            raise InputError("construct bdl needs --lattice FILE|SPEC")
        Ls = _lattices(cfg.lattice)
        if len(Ls) != 1:
            raise InputError(f"{cfg.lattice!r} names {len(Ls)} lattices; pick one")
        S = K.bdl_to_cldc(Ls[0], bound=cfg.bound)
        return _written(cfg, S, cldc_to_dict(S))
    if kind == "grothendieck":
        cfg2 = RunConfig(**{**cfg.__dict__, "builtin": f"groth:{cfg.functor or 'P'}"})
        inst = resolve_builtin(cfg2.builtin, cfg2)
        if inst.cldc is None:
            return {"laws": inst.extra, "error": str(inst.cldc_error)}
        return _written(cfg, inst.cldc, cldc_to_dict(inst.cldc))
    inst = inst_fn()
    if kind == "semiadd":
        S = _need_cldc(inst, cfg)
        zs = getattr(S, "zero", None)
        if zs is None:
            S = K.semiadditive_to_cldc(S.X, bound=cfg.bound)
        return _written(cfg, S, cldc_to_dict(S))
    if kind == "sz":
        Z = K.sz_subcategory(_need_cldc(inst, cfg), cfg.bound)
        return _written(cfg, Z, cldc_to_dict(Z))
    if kind in ("slice", "coslice"):
        S = _need_cldc(inst, cfg)
        Sl = (K.slice_over_bottom if kind == "slice" else K.coslice_under_top)(S, cfg.bound)
        return _written(cfg, Sl, cldc_to_dict(Sl))
    if kind == "product":
        if not cfg.second:
            raise InputError("construct product needs --with INSTANCE")
        other = resolve_builtin(cfg.second, cfg)
        S = K.product_cldc(_need_cldc(inst, cfg), _need_cldc(other, cfg), bound=cfg.bound)
        return _written(cfg, S, cldc_to_dict(S))
    if kind in ("kleisli", "wedge"):
        if inst.ldc is None or inst.smc is None:
            raise InputError(f"{inst.label} is not a {kind} instance")
        reps, mx = K.wedge_suite(inst.ldc, inst.smc, bound=cfg.bound)
        return _written(cfg, None, ldc_to_dict(inst.ldc), reps)
    raise InputError(f"unknown construction {kind!r}; choose from {', '.join(CONSTRUCTIONS)}")


def _written(cfg, S, data, reps=None):
    if reps is None:
        reps = list(S.reports) + (S.mix.reports if S.mix is not None else [])
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
    return {"laws": reps, "written": cfg.out}


def ldc_to_dict(L, objects=None):
    """Category file over the index objects plus the distributor components
    that land among them."""
    import itertools
    objs = list(L.objects if objects is None else objects)
    T, names = tabulate(L.cat, objs)
    d = T.to_dict()
    d["objects"] = [obj_label(o) for o in objs]
    for k in ("deltaL", "deltaR"):
        rows = []
        for w in itertools.product(objs, repeat=3):
            f = getattr(L, k)(*w)
            if f in names:
                rows.append({"objects": [obj_label(o) for o in w], "mor": names[f]})
        d[k] = rows
    return d


def _load_functor(path):
    if path is None:
        return None
    try:
        with open(path) as fh:
            d = json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}: {e.msg}") from None
    for key in ("objects", "morphisms"):
        if not isinstance(d.get(key), dict):
            raise InputError(f"{path}: field '{key}' must map source names to target names")
    return d


def _table_of(inst):
    if isinstance(inst.cat, TableCategory):
        return inst.cat, {m: m for m in inst.cat.order}
    T, names = tabulate(inst.cat)
    return T, {names[f]: names[f] for f in names}


def cmd_diff(cfg, a, b):
    """Check a name-level functor between two tabulated instances: types,
    identities, composition and (when both carry them) the distributors."""
    Ta, _ = _table_of(a)
    Tb, _ = _table_of(b)
    fd = _load_functor(cfg.functor)
    omap = (fd or {}).get("objects") or {o: o for o in Ta.objects}
    mmap = (fd or {}).get("morphisms") or {m: m for m in Ta.order}
    obj = LawCheck("diff.objects", Tb)
    typ = LawCheck("diff.typing", Tb)
    ident = LawCheck("diff.identities", Tb)
    comp = LawCheck("diff.composition", Tb)
    for o in Ta.objects:
        obj.claim((o,), omap.get(o) in Tb._objset, [o], ["an object of the target"])
    for m in Ta.order:
        dom, cod = Ta.types[m]
        tgt = mmap.get(m)
        ok = tgt in Tb.types and Tb.types[tgt] == (omap.get(dom), omap.get(cod))
        typ.claim((dom, cod), ok, [f"F({m}) = {tgt}"], ["a morphism F(dom) -> F(cod)"])
    for o in Ta.objects:
        ident.claim((o,), mmap.get(Ta.ids[o]) == Tb.ids.get(omap.get(o)),
                    [f"F(1_{o})"], [f"1_F({o})"])
    for (f, g), h in sorted(Ta.table.items()):
        want = Tb.table.get((mmap.get(f), mmap.get(g)))
        comp.claim((Ta.types[f][0], Ta.types[f][1], Ta.types[g][1]), mmap.get(h) == want,
                   [f"F({f};{g})"], [f"F({f});F({g})"])
    reps = [obj.report(), typ.report(), ident.report(), comp.report()]
    reps += _diff_families(a, b, omap, mmap, Tb)
    return {"laws": reps}


def _diff_families(a, b, omap, mmap, Tb):
    """Distributors compared through the object and morphism maps, on triples
    both sides tabulate."""
    import itertools
    if a.ldc is None or b.ldc is None:
        return []
    La, Lb = a.ldc, b.ldc
    Ta, na = tabulate(La.cat, La.objects)
    Tb2, nb = tabulate(Lb.cat, Lb.objects)
    by_label_b = {obj_label(o): o for o in Lb.objects}
    reps = []
    for fam in ("deltaL", "deltaR"):
        chk = LawCheck(f"diff.{fam}", Tb2)
        for w in itertools.product(La.objects, repeat=3):
            fa = getattr(La, fam)(*w)
            if fa not in na:
                continue
            wb = [by_label_b.get(omap.get(obj_label(o), obj_label(o))) for o in w]
            if None in wb:
                continue
            fb = getattr(Lb, fam)(*wb)
            chk.claim(tuple(obj_label(o) for o in w), mmap.get(na[fa], na[fa]) == nb.get(fb),
                      [f"F({fam}{obj_label(w)})"], [f"{fam}(F{obj_label(w)})"])
        reps.append(chk.report())
    return reps


# ---------------------------------------------------------------- output

def _law_items(reps):
    return [r.to_json() for r in reps]


def render(cfg, label, result):
    reps = result.get("laws", [])
    if cfg.fmt == "json":
        doc = {"instance": label, "laws": _law_items(reps)}
        for k in ("classification", "mix_kind", "written", "error"):
            if result.get(k) is not None:
                doc[k] = result[k]
        return json.dumps(doc, indent=1, sort_keys=True, default=str)
    lines = [f"# {label}"]
    lines += [str(r) for r in reps]
    cl = result.get("classification")
    if cl:
        for k, v in cl.items():
            if isinstance(v, dict):
                lines.append(f"{k}: {v['value']}")
        lines.append(f"mix_kind: {cl.get('mix_kind')}")
    for k in ("mix_kind", "written", "error"):
        if result.get(k) is not None:
            lines.append(f"{k}: {result[k]}")
    lines.append(f"overall: {summarize(reps) if reps else 'pass'}")
    return "\n".join(lines)


def exit_code(result):
    reps = result.get("laws", [])
    if result.get("error") or any(isinstance(r, LawReport) and r.failed for r in reps):
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- entry

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--builtin", help="builtin instance, e.g. finrel:2, bdl:chain:3")
    common.add_argument("--file", help="category or CLDC file")
    common.add_argument("--max-size", type=int, help="size parameter for builtin engines")
    common.add_argument("--bound", type=int, default=12, help="object bound for tuple laws")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=None,
                        help=f"worker threads (default ${JOBS_ENV} or 1)")
    common.add_argument("--seed", type=int, default=0, help="recorded with the run")
    p = argparse.ArgumentParser(prog="ldcbench", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="category axioms")
    lp = sub.add_parser("laws", parents=[common], help="run a law suite")
    lp.add_argument("suite", choices=SUITES)
    sub.add_parser("classify", parents=[common], help="collapse classification")
    cp = sub.add_parser("construct", parents=[common], help="build an instance")
    cp.add_argument("kind", choices=CONSTRUCTIONS)
    cp.add_argument("--out", help="write the result here")
    cp.add_argument("--with", dest="second", help="second factor for product")
    cp.add_argument("--lattice", help="lattice file or generator spec for bdl")
    cp.add_argument("--functor", help="P, P2 or const for grothendieck")
    dp = sub.add_parser("diff", parents=[common], help="compare two instances")
    dp.add_argument("left")
    dp.add_argument("right")
    dp.add_argument("--functor", help="functor file mapping names; identity if omitted")
    return p


def _jobs(ns):
    if ns.jobs is not None:
        return ns.jobs
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None


def run(cfg):
    """Execute a configured command; returns (exit code, rendered report)."""
    if cfg.command == "diff":
        a, b = _diff_side(cfg, cfg.left), _diff_side(cfg, cfg.right)
        result, label = cmd_diff(cfg, a, b), f"{a.label} -> {b.label}"
    elif cfg.command == "construct":
        result = cmd_construct(cfg, lambda: load_instance(cfg))
        label = f"construct {cfg.kind}"
    else:
        inst = load_instance(cfg)
        label = inst.label
        result = {"validate": cmd_validate, "laws": cmd_laws,
                  "classify": cmd_classify}[cfg.command](cfg, inst)
    return exit_code(result), render(cfg, label, result)


def _diff_side(cfg, ref):
    """A diff operand is a file path or a builtin name."""
    if not os.path.exists(ref):
        return resolve_builtin(ref, cfg)
    return load_instance(cfg, ref)


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig(command=ns.command, builtin=ns.builtin, file=ns.file,
                        max_size=ns.max_size, bound=ns.bound, suite=getattr(ns, "suite", None),
                        kind=getattr(ns, "kind", None), fmt=ns.fmt, jobs=_jobs(ns),
                        seed=ns.seed, out=getattr(ns, "out", None),
                        second=getattr(ns, "second", None),
                        lattice=getattr(ns, "lattice", None),
                        functor=getattr(ns, "functor", None),
                        left=getattr(ns, "left", None), right=getattr(ns, "right", None))
        code, text = run(cfg)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (LawFailure, DeltaSearchFailed, HardFailure) as e:
        print(f"law failure: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, ValueError, KeyError, CategoryError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
