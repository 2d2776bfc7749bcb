"""Command-line front end.

Exit codes: 0 success, 1 domain error (axiom or hypothesis failure),
2 I/O or parse error.  Inputs are file paths, or compact constructor
specs ("chain:4", "hsum:2,3,3", "prod:chain:2,chain:2", "diamond")
recognized by their leading constructor name.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .core import ValidationError, validate
from .corpus import ParseError, SpecError, from_spec, is_spec_string, parse, serialize
from .enumeration import (
    DEFAULT_MAX_SIZE,
    SURVEY_COLUMNS,
    SizeTooLarge,
    survey,
    write_enumeration,
)
from .lemmas import analyze, lemma_suite, render_reports
from .structure import DecomposeError, decompose

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2

ENV_MAX_SIZE = "EFFECTKIT_MAX_SIZE"


@dataclass
class CliConfig:
    subcommand: str
    source: str | None = None
    out: str | None = None
    max_size: int = 6
    parallel: int = 1
    fmt: str = "text"


def _load(source):
    if is_spec_string(source):
        return from_spec(source)
    with open(source, "rb") as fh:
        data = fh.read()
    return validate(parse(data))


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(cfg):
    _load(cfg.source)
    print("valid")
    return EXIT_OK


def cmd_analyze(cfg):
    report = analyze(_load(cfg.source))
    doc = report.as_dict()
    if cfg.fmt == "json":
        _emit(json.dumps(doc, sort_keys=True) + "\n", cfg.out)
    else:
        keys = ("size", "one", "atoms", "sharp", "homogeneous", "lattice", "isotropy")
        _emit("".join(f"{k}: {json.dumps(doc[k])}\n" for k in keys), cfg.out)
    return EXIT_OK


def cmd_decompose(cfg):
    dec = decompose(_load(cfg.source))
    if cfg.fmt == "json":
        doc = {
            "chains": list(dec.chain_lengths),
            "labeling": [[x, *dec.labeling[x]] for x in sorted(dec.labeling)],
        }
        _emit(json.dumps(doc, sort_keys=True) + "\n", cfg.out)
    else:
        _emit(dec.render() + "\n", cfg.out)
    return EXIT_OK


def cmd_lemmas(cfg):
    reports = lemma_suite(_load(cfg.source))
    if cfg.fmt == "json":
        doc = [
            {
                "lemma": r.lemma_id,
                "verdict": r.verdict,
                "witness": None if r.witness is None else list(r.witness),
            }
            for r in reports
        ]
        _emit(json.dumps(doc, sort_keys=True) + "\n", cfg.out)
    else:
        _emit(render_reports(reports) + "\n", cfg.out)
    return EXIT_OK


def cmd_enumerate(cfg):
    cap = int(os.environ.get(ENV_MAX_SIZE, DEFAULT_MAX_SIZE))
    if cfg.out:
        rows = write_enumeration(
            cfg.out, cfg.max_size, max_size=cap, parallel=cfg.parallel
        )
    else:
        rows = survey(cfg.max_size, max_size=cap, parallel=cfg.parallel)
    if cfg.fmt == "json":
        doc = [{c: getattr(r, c) for c in SURVEY_COLUMNS} for r in rows]
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\t".join(SURVEY_COLUMNS) + "\n")
        for row in rows:
            sys.stdout.write(row.as_tsv() + "\n")
    return EXIT_OK


def cmd_generate(cfg):
    e = from_spec(cfg.source)
    data = serialize(e.table)
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def cmd_hasse(cfg):
    e = _load(cfg.source)
    lines = ["digraph hasse {"]
    for x in e.carrier:
        label = "0" if x == 0 else "1" if x == e.one else f"e{x}"
        lines.append(f'  n{x} [label="{label}"];')
    for x, y in e.hasse_covers():
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


_COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "lemmas": cmd_lemmas,
    "enumerate": cmd_enumerate,
    "generate": cmd_generate,
    "hasse": cmd_hasse,
}


def _parser():
    p = argparse.ArgumentParser(prog="effectkit", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name, source_help=None, fmt_choices=("text", "json")):
        sp = sub.add_parser(name)
        if source_help:
            sp.add_argument("source", help=source_help)
        if fmt_choices:
            sp.add_argument("--format", dest="fmt", choices=fmt_choices,
                            default=fmt_choices[0])
        sp.add_argument("--out", default=None)
        return sp

    add("validate", "table file or constructor spec", fmt_choices=None)
    add("analyze", "table file or constructor spec")
    add("decompose", "table file or constructor spec")
    add("lemmas", "table file or constructor spec")
    en = add("enumerate", None, fmt_choices=("tsv", "json"))
    en.add_argument("--max-size", dest="max_size", type=int, default=6)
    en.add_argument("--parallel", dest="parallel", type=int, default=1)
    add("generate", "constructor spec", fmt_choices=None)
    ha = add("hasse", "table file or constructor spec", fmt_choices=("dot",))
    return p


def main(argv=None):
    ns = _parser().parse_args(argv)
    cfg = CliConfig(
        subcommand=ns.subcommand,
        source=getattr(ns, "source", None),
        out=ns.out,
        max_size=getattr(ns, "max_size", 6),
        parallel=max(1, getattr(ns, "parallel", 1)),
        fmt=getattr(ns, "fmt", "text"),
    )
    try:
        return _COMMANDS[cfg.subcommand](cfg)
    except (ParseError, SpecError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DecomposeError as exc:
        print(f"decompose error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SizeTooLarge as exc:
        print(f"size error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
