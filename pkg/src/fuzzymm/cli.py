"""Command-line interface: ``fuzzymm <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 I/O or file-format error.  Machine-readable output (CSV, JSON) uses
17 significant digits; human-readable tables use 4.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

MACHINE, HUMAN = ".17g", ".4g"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vec(values, fmt=HUMAN):
    return "[" + ", ".join(format(float(v), fmt) for v in values) + "]"


def _out_stream(path):
    return sys.stdout if path in (None, "-") else open(path, "w", newline="", encoding="utf-8")


# ---------------------------------------------------------------- data input

def _add_data_args(p):
    g = p.add_argument_group("dataset (exactly one source)")
    g.add_argument("--images", metavar="DIR", help="folder with one sub-folder of images per class")
    g.add_argument("--size", metavar="WxH", help="resize target for --images; image geometry for motion blur on CSV data")
    g.add_argument("--data", metavar="CSV", help="encoded fuzzy vectors: label,x0,x1,...")
    g.add_argument("--embeddings", metavar="CSV", help="raw embeddings: label,v0,v1,... (standardized with a logistic)")
    g.add_argument("--first", type=int, metavar="N",
                   help="train on the first N items of each class and test on the rest")


def _load_source(args):
    from .datasets import load_image_folder, parse_size, read_vectors_csv
    from .errors import ConfigError

    sources = [s for s in ("images", "data", "embeddings") if getattr(args, s, None)]
    if len(sources) != 1:
        raise ConfigError("give exactly one of --images, --data, --embeddings")
    if args.images:
        if not args.size:
            raise ConfigError("--images needs --size WxH")
        return load_image_folder(args.images, parse_size(args.size)), False
    ds = read_vectors_csv(args.data or args.embeddings)
    if args.size:
        w, h = parse_size(args.size)
        ds.shape = (h, w)
    return ds, bool(args.embeddings)


def _encode_embeddings(train, others):
    from .encoding import fit_embedding_stats, standardize_logistic

    stats = fit_embedding_stats(train.vectors)
    train.vectors = standardize_logistic(train.vectors, stats)
    for d in others:
        d.vectors = standardize_logistic(d.vectors, stats)


def _train_test(args):
    """Return (train, test); without --first the whole set plays both roles."""
    ds, raw = _load_source(args)
    if args.first is not None:
        train, test = ds.first_n_split(args.first)
    else:
        train, test = ds, ds.subset(range(len(ds)))
    if raw:
        _encode_embeddings(train, [test] if test is not train else [])
    return train, test


# ---------------------------------------------------------------- model flags

def _add_model_args(p):
    from .classifier import MODEL_KINDS
    from .connectives import FAMILY_NAMES

    g = p.add_argument_group("model")
    g.add_argument("--kind", default="zadeh_max", choices=MODEL_KINDS)
    g.add_argument("--family", choices=FAMILY_NAMES)
    g.add_argument("--mask", default="on", choices=("on", "off"))
    g.add_argument("--mask-strategy", default="similarity", choices=("similarity", "nmse-compare"))
    g.add_argument("--similarity", default="hamming", choices=("hamming",))
    g.add_argument("--epsilon", type=float, default=0.0,
                   help="comparison tolerance for the Zadeh kinds (default: exact)")


def _config(args):
    from .classifier import ModelConfig

    return ModelConfig(kind=args.kind, family=args.family, mask=args.mask == "on",
                       mask_strategy=args.mask_strategy, similarity=args.similarity,
                       epsilon=args.epsilon)


def _parse_vector(text):
    from .errors import ConfigError

    try:
        return [float(t) for t in text.replace(";", ",").split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse vector {text!r}; expected comma-separated numbers") from None


# ---------------------------------------------------------------- commands

def cmd_encode(args):
    from .datasets import write_vectors_csv

    ds, raw = _load_source(args)
    if raw:
        train = ds.first_n_split(args.first)[0] if args.first is not None else ds
        # statistics come from the training portion only, applied to everything
        from .encoding import fit_embedding_stats, standardize_logistic

        ds.vectors = standardize_logistic(ds.vectors, fit_embedding_stats(train.vectors))
    write_vectors_csv(args.out, ds.vectors, ds.labels)
    print(f"wrote {len(ds)} vectors of length {ds.vectors.shape[1]} to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_train(args):
    from .classifier import build_bank
    from .serialize import save

    train, _ = _train_test(args)
    bank = build_bank(train.vectors, train.labels, _config(args))
    save(bank, args.out)
    print(f"trained {len(bank.labels)} class memories (n={bank.n}) -> {args.out}", file=sys.stderr)
    return EXIT_OK


def _select_memory(obj, label):
    from .classifier import MemoryBank
    from .errors import ConfigError, NotFoundError

    if isinstance(obj, MemoryBank):
        if label is None:
            if len(obj.labels) == 1:
                return obj.models[0]
            raise ConfigError("the model is a bank; pick a class memory with --label")
        if label not in obj.labels:
            raise NotFoundError(f"no class {label!r} in the bank")
        return obj.models[obj.labels.index(label)]
    return obj


def cmd_recall(args):
    import numpy as np

    from .masking import MaskedMemory
    from .serialize import load

    mem = _select_memory(load(args.model), args.label)
    x = np.asarray(_parse_vector(args.x))
    trace, inner, xin = {}, mem, x
    if isinstance(mem, MaskedMemory):
        trace["mask_index"] = mem.mask_index(x)
        xin = mem.masked_input(x)
        inner = mem.inner
    if hasattr(inner, "recall_with_trace"):
        y, t = inner.recall_with_trace(xin)
        trace["coefficients"] = [float(c) for c in t.coefficients]
        if t.index_set is not None:
            trace["index_set"] = sorted(int(i) for i in t.index_set)
    else:
        y = inner.recall(xin)
    if args.json:
        doc = {"recalled": [format(float(v), MACHINE) for v in y]}
        doc.update({k: ([format(c, MACHINE) for c in v] if k == "coefficients" else v) for k, v in trace.items()})
        print(json.dumps(doc, indent=2))
    else:
        print("recalled:", _vec(y))
        for k, v in trace.items():
            print(f"{k}:", _vec(v) if k == "coefficients" else v)
    return EXIT_OK


def cmd_classify(args):
    import numpy as np

    from .classifier import MemoryBank
    from .datasets import read_vectors_csv
    from .errors import ConfigError
    from .serialize import load

    bank = load(args.model)
    if not isinstance(bank, MemoryBank):
        raise ConfigError("classify needs a trained bank (see `fuzzymm train`)")
    if (args.x is None) == (args.input is None):
        raise ConfigError("give exactly one of --x or --input")
    if args.x is not None:
        rows, names = np.asarray([_parse_vector(args.x)]), ["x"]
    else:
        ds = read_vectors_csv(args.input)
        rows, names = ds.vectors, ds.labels
    results = [(name, *bank.classify(x)) for name, x in zip(names, rows)]
    if args.json:
        print(json.dumps([{"input": str(n), "label": str(lab),
                           "scores": {str(c): format(float(s), MACHINE) for c, s in zip(bank.labels, sc)}}
                          for n, lab, sc in results], indent=2))
    else:
        for n, lab, sc in results:
            best = ", ".join(f"{c}={format(float(s), HUMAN)}" for c, s in zip(bank.labels, sc))
            print(f"{n}: {lab}    ({best})")
    return EXIT_OK


def _corrupt_test(test, noise, seed):
    from .noise import corrupt_batch, parse_noise

    if noise is None:
        return test.vectors
    return corrupt_batch(test.vectors, parse_noise(noise, seed), test.shape)


def cmd_eval(args):
    from .classifier import MemoryBank, build_bank, evaluate
    from .errors import ConfigError
    from .serialize import load

    if args.model:
        bank = load(args.model)
        if not isinstance(bank, MemoryBank):
            raise ConfigError("eval --model needs a trained bank")
        ds, raw = _load_source(args)
        if raw:
            raise ConfigError("--embeddings with --model is ambiguous; encode the test set first")
        test = ds.first_n_split(args.first)[1] if args.first is not None else ds
    else:
        train, test = _train_test(args)
        bank = build_bank(train.vectors, train.labels, _config(args))
    report = evaluate(bank, _corrupt_test(test, args.noise, args.seed), test.labels)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n" if args.out.endswith(".json") else report.to_csv())
    if args.json:
        print(report.to_json())
    else:
        print(f"overall RR: {format(report.overall_rr, HUMAN)}  ({int(report.confusion.trace())}/{report.total})"
              f"  in {format(report.elapsed, HUMAN)} s")
        for lab in report.labels:
            rr = report.per_class_rr[lab]
            print(f"  {lab}: {'n/a' if rr is None else format(rr, HUMAN)}")
    return EXIT_OK


def rep_seed(seed: int, rep: int) -> int:
    """Seed for one repetition of a sweep, independent of the per-image XOR."""
    import numpy as np

    return int(np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(rep)]).generate_state(1, np.uint64)[0])


def cmd_noise_sweep(args):
    import csv

    from .classifier import build_bank, evaluate
    from .errors import ConfigError
    from .noise import NoiseSpec, corrupt_batch, default_levels

    if args.reps < 1:
        raise ConfigError("--reps must be at least 1")
    kind = args.noise.split(":", 1)[0].strip()
    if args.levels:
        levels = [float(t) for t in args.levels.split(",") if t.strip()]
    elif ":" in args.noise:
        levels = [float(args.noise.split(":", 1)[1])]
    else:
        levels = default_levels(kind)
    specs = [NoiseSpec(kind, lv) for lv in levels]  # validates every level up front
    train, test = _train_test(args)
    bank = build_bank(train.vectors, train.labels, _config(args))
    fh = _out_stream(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["noise", "level", "rep", "seed", "rr"])
        for spec in specs:
            for rep in range(args.reps):
                s = rep_seed(args.seed, rep)
                X = corrupt_batch(test.vectors, spec.with_seed(s), test.shape)
                rr = evaluate(bank, X, test.labels).overall_rr
                w.writerow([spec.kind, format(spec.level, MACHINE) if spec.kind != "motion" else spec.level,
                            rep, s, format(rr, MACHINE)])
                fh.flush()
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_verify_paper(args):
    from .reference import run_reference_checks

    results = run_reference_checks()
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "checks": [r.to_dict() for r in results]}, indent=2))
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name:<32} err={format(r.max_error, HUMAN):<10} tol={r.tolerance:g}"
            print(line)
            if not r.passed:
                print(f"      {r.description}")
                print(f"      computed {_vec(r.computed)}  printed {_vec(r.expected)}")
                if r.note:
                    print(f"      note: {r.note}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fuzzymm", description="Fuzzy morphological associative memories and memory-bank classifiers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("encode", help="encode an image folder or an embedding CSV into a fuzzy-vector CSV")
    _add_data_args(s)
    s.add_argument("--out", required=True, metavar="CSV")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("train", help="train one memory per class and save the bank as JSON")
    _add_data_args(s)
    _add_model_args(s)
    s.add_argument("--out", required=True, metavar="JSON")
    s.set_defaults(func=cmd_train)

    s = sub.add_parser("recall", help="recall a vector from a saved memory (or one class of a bank)")
    s.add_argument("--model", required=True, metavar="JSON")
    s.add_argument("--label", help="class memory to use when the model is a bank")
    s.add_argument("--x", required=True, metavar="V1,V2,...")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_recall)

    s = sub.add_parser("classify", help="classify vectors with a saved bank")
    s.add_argument("--model", required=True, metavar="JSON")
    s.add_argument("--x", metavar="V1,V2,...")
    s.add_argument("--input", metavar="CSV", help="rows name,x0,x1,...")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("eval", help="recognition rates, per class and overall")
    _add_data_args(s)
    _add_model_args(s)
    s.add_argument("--model", metavar="JSON", help="evaluate a saved bank instead of training one")
    s.add_argument("--noise", metavar="KIND:LEVEL", help="corrupt the test set, e.g. salt_pepper:0.05")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", metavar="PATH", help="write the report (.json for JSON, CSV otherwise)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("noise-sweep", help="recognition rate over a grid of noise levels (CSV)")
    _add_data_args(s)
    _add_model_args(s)
    s.add_argument("--noise", required=True, metavar="KIND[:LEVEL]",
                   help="salt_pepper, gaussian or motion; a level pins a single grid point")
    s.add_argument("--levels", metavar="L1,L2,...", help="explicit grid (default: the standard grid for KIND)")
    s.add_argument("--reps", type=int, default=30)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", metavar="CSV", help="default: stdout")
    s.set_defaults(func=cmd_noise_sweep)

    s = sub.add_parser("verify-paper", help="recompute the published worked examples and compare")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    from .errors import FileError, FormatError, FuzzyMemoryError

    try:
        return args.func(args)
    except (FileError, FormatError, OSError) as exc:
        print(f"fuzzymm {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FuzzyMemoryError, ValueError) as exc:
        print(f"fuzzymm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
