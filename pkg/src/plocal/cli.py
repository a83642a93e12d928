"""Corpus ingestion, configuration, orchestration and reporting.

Corpus format (line oriented, ``#`` comments, 0-based cycle notation):

    group <name> p=<prime> gens=<cycles>;<cycles>;...
    normal gens=<cycles>;...
    X=<cycles>;...              # optional, repeatable: restrict the X sweep
    K=<aut|inn|id|gens:...>     # optional, repeatable: restrict the K sweep

Every ``group`` line starts an entry; the following ``normal``/``X``/``K``
lines attach to it. The declared normal subgroup is validated at load time.

The JSON report is a canonical document: reports sorted by (entry,
statement, instance), keys sorted, no timestamps, so identical runs are
byte-identical. Timing goes to stdout only.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import groups as gp
from . import verify as vf
from .errors import CorpusParseError, NormalityError, PLocalError
from .perm import Perm, max_point, perm_from_cycles
from .report import VerificationReport


@dataclass
class CorpusEntry:
    """One corpus line-group: an ambient group, a prime, a declared normal
    subgroup, and optional sweep restrictions."""

    name: str
    p: int
    gen_strings: Tuple[str, ...]
    normal_gen_strings: Tuple[str, ...] = ()
    X_strings: Tuple[str, ...] = ()
    K_strings: Tuple[str, ...] = ()
    degree: int = 0

    def generators(self) -> List[Perm]:
        return [perm_from_cycles(s, self.degree) for s in self.gen_strings]

    def normal_generators(self) -> List[Perm]:
        if not self.normal_gen_strings:
            return self.generators()
        return [perm_from_cycles(s, self.degree) for s in self.normal_gen_strings]

    def X_subgroups(self, G, S):
        """Explicitly requested X subgroups (must lie inside S), or None."""
        if not self.X_strings:
            return None
        out = []
        for spec in self.X_strings:
            gens = [perm_from_cycles(s, self.degree) for s in _split_cycles(spec)]
            X = G.generated_subgroup(gens)
            if not X.elems <= S.elems:
                raise CorpusParseError(
                    "entry %s: X=%s is not inside the Sylow subgroup" % (self.name, spec)
                )
            out.append(X)
        return tuple(out)

    def K_descriptors(self) -> Optional[Tuple[str, ...]]:
        return tuple(self.K_strings) if self.K_strings else None


@dataclass
class RunConfig:
    """Caps, filters and IO knobs for one suite run."""

    corpus_path: Optional[Path] = None
    statements: Optional[Tuple[str, ...]] = None
    element_cap: int = gp.ELEMENT_CAP
    word_len: int = 3
    aut_cap: int = 24
    jobs: int = 1
    report_path: Optional[Path] = None
    cache_dir: Optional[Path] = None
    no_cache: bool = False

    def __post_init__(self):
        if self.element_cap <= 0 or self.word_len <= 0 or self.jobs <= 0:
            raise ValueError("caps must be positive")
        if self.statements is not None:
            unknown = set(self.statements) - set(vf.STATEMENTS)
            if unknown:
                raise ValueError("unknown statement ids: %s" % sorted(unknown))


def _split_cycles(text: str) -> List[str]:
    return [part.strip() for part in text.split(";") if part.strip()]


def parse_corpus(text: str) -> List[CorpusEntry]:
    """Parse and validate corpus text; normality is checked at load."""
    entries: List[CorpusEntry] = []
    raw: List[dict] = []
    cur: Optional[dict] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("group "):
            m = re.match(r"group\s+(\S+)\s+p=(\S+)\s+gens=(.*)$", stripped)
            if m is None:
                raise CorpusParseError(
                    "malformed group line (expected: group <name> p=<p> gens=<cycles;...>)",
                    lineno,
                )
            name = m.group(1)
            try:
                p = int(m.group(2))
            except ValueError:
                raise CorpusParseError("bad prime %r" % m.group(2), lineno)
            if p < 2 or any(p % d == 0 for d in range(2, p)):
                raise CorpusParseError("p=%d is not prime" % p, lineno)
            cur = {
                "name": name,
                "p": p,
                "gens": _split_cycles(m.group(3)),
                "normal": [],
                "X": [],
                "K": [],
                "line": lineno,
            }
            if not cur["gens"]:
                raise CorpusParseError("empty generator list", lineno)
            raw.append(cur)
        elif stripped.startswith("normal "):
            if cur is None:
                raise CorpusParseError("normal line before any group line", lineno)
            if not stripped.split(None, 1)[1].startswith("gens="):
                raise CorpusParseError("normal line needs gens=", lineno)
            cur["normal"] = _split_cycles(stripped.split("gens=", 1)[1])
        elif stripped.startswith("X="):
            if cur is None:
                raise CorpusParseError("X line before any group line", lineno)
            cur["X"].append(stripped[2:].strip())
        elif stripped.startswith("K="):
            if cur is None:
                raise CorpusParseError("K line before any group line", lineno)
            cur["K"].append(stripped[2:].strip())
        else:
            raise CorpusParseError("unrecognized line: %r" % stripped, lineno)

    for r in raw:
        all_strings = list(r["gens"]) + list(r["normal"]) + [
            s for spec in r["X"] for s in _split_cycles(spec)
        ]
        try:
            degree = max(max_point(s) for s in all_strings) + 1
        except ValueError:
            raise CorpusParseError("no points in entry %s" % r["name"], r["line"])
        entry = CorpusEntry(
            name=r["name"],
            p=r["p"],
            gen_strings=tuple(r["gens"]),
            normal_gen_strings=tuple(r["normal"]),
            X_strings=tuple(r["X"]),
            K_strings=tuple(r["K"]),
            degree=max(degree, 1),
        )
        try:
            G = gp.generate_group(entry.generators())
            H = gp.generate_group(entry.normal_generators())
        except ValueError as exc:
            raise CorpusParseError(
                "entry %s: %s" % (entry.name, exc), r["line"]
            )
        if not H.elements <= G.elements:
            raise NormalityError(
                "entry %s: declared subgroup is not inside the group" % entry.name
            )
        if not gp.Subgroup(G, H.elements).is_normal_in(G.full_subgroup()):
            raise NormalityError(
                "entry %s: declared subgroup is not normal" % entry.name
            )
        entries.append(entry)
    return entries


def default_corpus_text() -> str:
    from importlib.resources import files

    return files("plocal").joinpath("data/default_corpus.txt").read_text()


# ---------------------------------------------------------------------------
# on-disk caching of the pure enumerations


def _group_key(degree: int, elements) -> str:
    blob = repr((degree, sorted(p.images for p in elements)))
    return hashlib.sha256(blob.encode()).hexdigest()


def _load_cache(cache_dir: Path):
    path = cache_dir / "lattice_cache.json"
    if not path.exists():
        return
    data = json.loads(path.read_text())
    for rec in data.get("subgroups", []):
        elems = frozenset(Perm(tuple(im)) for im in rec["group"])
        G = gp.FiniteGroup(elems)
        order = sorted(elems)
        subs = tuple(
            gp.Subgroup(G, frozenset(order[i] for i in idxs)) for idxs in rec["subs"]
        )
        gp._SUBGROUP_CACHE[(rec["degree"], elems)] = subs
    for rec in data.get("auts", []):
        base_elems = frozenset(Perm(tuple(im)) for im in rec["base"])
        order = sorted(base_elems)
        base = gp.Subgroup(gp.FiniteGroup(base_elems), base_elems)
        maps = frozenset(
            gp.GroupInjection(
                tuple((order[i], order[j]) for i, j in enumerate(images)), base_elems
            )
            for images in rec["maps"]
        )
        gp._AUT_CACHE[(rec["degree"], base_elems)] = gp.AutGroup(base, maps)


def _save_cache(cache_dir: Path):
    cache_dir.mkdir(parents=True, exist_ok=True)
    subs_out = []
    for (degree, elems), subs in sorted(
        gp._SUBGROUP_CACHE.items(), key=lambda kv: (kv[0][0], sorted(p.images for p in kv[0][1]))
    ):
        order = sorted(elems)
        index = {x: i for i, x in enumerate(order)}
        subs_out.append(
            {
                "degree": degree,
                "group": [list(p.images) for p in order],
                "subs": [sorted(index[x] for x in H.elems) for H in subs],
            }
        )
    auts_out = []
    for (degree, elems), A in sorted(
        gp._AUT_CACHE.items(), key=lambda kv: (kv[0][0], sorted(p.images for p in kv[0][1]))
    ):
        order = sorted(elems)
        index = {x: i for i, x in enumerate(order)}
        auts_out.append(
            {
                "degree": degree,
                "base": [list(p.images) for p in order],
                "maps": sorted(
                    [index[m(x)] for x in order] for m in A.maps
                ),
            }
        )
    path = cache_dir / "lattice_cache.json"
    path.write_text(json.dumps({"subgroups": subs_out, "auts": auts_out}))


def default_cache_dir() -> Path:
    root = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return Path(root) / "plocal"


# ---------------------------------------------------------------------------
# run orchestration


def render_report_doc(reports: Sequence[VerificationReport]) -> str:
    """Canonical JSON body: a top-level array of report objects, sorted
    keys, stable ordering, no timestamps, trailing newline."""
    doc = [r.to_json_obj() for r in reports]
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def summarize(reports: Sequence[VerificationReport], coverage, stream=None) -> None:
    stream = stream or sys.stdout
    width = max(len(s) for s in coverage)
    print("%-*s %6s %6s %8s %8s" % (width, "statement", "pass", "fail", "skipped", "nondeg"), file=stream)
    for stmt in sorted(coverage):
        c = coverage[stmt]
        print(
            "%-*s %6d %6d %8d %8d"
            % (width, stmt, c["pass"], c["fail"], c["skipped"], c["nondegenerate_pass"]),
            file=stream,
        )
    fails = [r for r in reports if r.failed]
    if fails:
        print("\nFAILURES:", file=stream)
        for r in fails:
            print("  %s %s: %r" % (r.statement, r.instance, r.witness), file=stream)


def run(config: RunConfig, corpus_text: Optional[str] = None) -> int:
    """Execute the suite; returns the process exit status (0/1/2)."""
    try:
        if corpus_text is None:
            if config.corpus_path is not None:
                corpus_text = Path(config.corpus_path).read_text()
            else:
                corpus_text = default_corpus_text()
        entries = parse_corpus(corpus_text)
    except (CorpusParseError, NormalityError, OSError) as exc:
        print("corpus error: %s" % exc, file=sys.stderr)
        return 2

    cache_dir = config.cache_dir or default_cache_dir()
    if not config.no_cache:
        try:
            if cache_dir.exists():
                _load_cache(cache_dir)
        except (OSError, ValueError, KeyError) as exc:
            print("cache error: %s" % exc, file=sys.stderr)
            return 2

    t0 = time.time()
    try:
        reports, coverage = vf.run_suite(
            entries,
            statements=config.statements,
            aut_cap=config.aut_cap,
            word_len=config.word_len,
            jobs=config.jobs,
        )
    except PLocalError as exc:
        print("suite error: %s" % exc, file=sys.stderr)
        return 2
    elapsed = time.time() - t0

    doc = render_report_doc(reports)
    if config.report_path is not None:
        try:
            Path(config.report_path).write_text(doc)
        except OSError as exc:
            print("report error: %s" % exc, file=sys.stderr)
            return 2

    if not config.no_cache:
        try:
            _save_cache(cache_dir)
        except OSError as exc:
            print("cache error: %s" % exc, file=sys.stderr)
            return 2

    summarize(reports, coverage)
    print("\n%d reports in %.1fs" % (len(reports), elapsed))
    return 1 if any(r.failed for r in reports) else 0


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="plocal",
        description="verify the statement suite over a corpus of small groups",
    )
    ap.add_argument("--corpus", type=Path, default=None, help="corpus file (default: shipped corpus)")
    ap.add_argument(
        "--statement",
        action="append",
        default=None,
        metavar="ID",
        help="restrict to a statement id (repeatable): %s" % ", ".join(vf.STATEMENTS),
    )
    ap.add_argument("--max-elements", type=int, default=gp.ELEMENT_CAP, help="group closure cap")
    ap.add_argument(
        "--full-word-check",
        action="store_true",
        help="check partial-group words up to length 4 instead of 3",
    )
    ap.add_argument("--jobs", type=int, default=1, help="parallel corpus entries")
    ap.add_argument("--report", type=Path, default=None, help="write the JSON report here")
    ap.add_argument("--cache-dir", type=Path, default=None, help="lattice cache directory")
    ap.add_argument("--no-cache", action="store_true", help="disable the on-disk cache")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        config = RunConfig(
            corpus_path=args.corpus,
            statements=tuple(args.statement) if args.statement else None,
            element_cap=args.max_elements,
            word_len=4 if args.full_word_check else 3,
            jobs=args.jobs,
            report_path=args.report,
            cache_dir=args.cache_dir,
            no_cache=args.no_cache,
        )
    except ValueError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
