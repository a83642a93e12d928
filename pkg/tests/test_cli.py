"""Corpus parsing, config validation, report output, determinism, caching
and exit codes."""

import json

import pytest

from plocal import cli
from plocal import groups as gp
from plocal.errors import CorpusParseError, NormalityError

GOOD = """
# comment line
group s3_a3 p=3 gens=(0 1 2);(0 1)
normal gens=(0 1 2)
"""

WITH_XK = """
group d8 p=2 gens=(0 1 2 3);(0 2)
normal gens=(0 1 2 3);(0 2)
X=(0 1)(2 3)
K=aut
K=id
"""


def test_parse_empty():
    assert cli.parse_corpus("") == []
    assert cli.parse_corpus("# only a comment\n") == []


def test_parse_default_corpus_has_four_entries():
    entries = cli.parse_corpus(cli.default_corpus_text())
    assert [e.name for e in entries] == ["s4_a4", "d8_d8", "s3_a3", "sl23_q8"]
    assert [e.p for e in entries] == [2, 2, 3, 2]
    orders = [gp.generate_group(e.generators()).order for e in entries]
    assert orders == [24, 8, 6, 24]


def test_parse_round_trip_fields():
    (e,) = cli.parse_corpus(GOOD)
    assert e.name == "s3_a3" and e.p == 3
    assert gp.generate_group(e.generators()).order == 6
    assert gp.generate_group(e.normal_generators()).order == 3


def test_parse_x_and_k_lines():
    (e,) = cli.parse_corpus(WITH_XK)
    G = gp.generate_group(e.generators())
    S = gp.sylow_subgroup(G, 2)
    xs = e.X_subgroups(G, S)
    assert len(xs) == 1 and xs[0].order == 2
    assert e.K_descriptors() == ("aut", "id")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(CorpusParseError) as ei:
        cli.parse_corpus("group broken\n")
    assert ei.value.line == 1
    with pytest.raises(CorpusParseError) as ei:
        cli.parse_corpus("normal gens=(0 1)\n")
    assert ei.value.line == 1
    with pytest.raises(CorpusParseError):
        cli.parse_corpus("group g p=4 gens=(0 1)\n")  # 4 is not prime
    with pytest.raises(CorpusParseError):
        cli.parse_corpus("group g p=2 gens=(0 1)\nnonsense\n")


def test_parse_rejects_non_normal_subgroup():
    bad = "group s3 p=3 gens=(0 1 2);(0 1)\nnormal gens=(0 1)\n"
    with pytest.raises(NormalityError):
        cli.parse_corpus(bad)


def test_x_outside_sylow_rejected():
    text = "group s3 p=3 gens=(0 1 2);(0 1)\nnormal gens=(0 1 2)\nX=(0 1)\n"
    (e,) = cli.parse_corpus(text)
    G = gp.generate_group(e.generators())
    S = gp.sylow_subgroup(G, 3)
    with pytest.raises(CorpusParseError):
        e.X_subgroups(G, S)


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(statements=("Lemma-9.9",))
    with pytest.raises(ValueError):
        cli.RunConfig(element_cap=0)


def test_run_small_corpus(tmp_path, capsys):
    report = tmp_path / "r.json"
    config = cli.RunConfig(report_path=report, cache_dir=tmp_path / "c")
    status = cli.run(config, corpus_text=GOOD)
    assert status == 0
    doc = json.loads(report.read_text())
    assert isinstance(doc, list)
    assert {r["statement"] for r in doc} >= {"Axioms", "Lemma-2.1"}
    out = capsys.readouterr().out
    assert "statement" in out and "reports in" in out


def test_statement_filter(tmp_path):
    report = tmp_path / "r.json"
    config = cli.RunConfig(
        report_path=report,
        cache_dir=tmp_path / "c",
        statements=("Lemma-2.2b",),
    )
    assert cli.run(config, corpus_text=GOOD) == 0
    doc = json.loads(report.read_text())
    checker_stmts = {r["statement"] for r in doc} - {"Axioms"}
    assert checker_stmts == {"Lemma-2.2b"}


def test_byte_identical_reports_and_cache_neutrality(tmp_path):
    r1, r2, r3 = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
    cache = tmp_path / "cache"
    assert cli.run(cli.RunConfig(report_path=r1, cache_dir=cache), GOOD) == 0
    assert cli.run(cli.RunConfig(report_path=r2, cache_dir=cache), GOOD) == 0
    assert cli.run(cli.RunConfig(report_path=r3, no_cache=True), GOOD) == 0
    assert r1.read_bytes() == r2.read_bytes() == r3.read_bytes()


def test_jobs_flag_keeps_output_identical(tmp_path):
    corpus = GOOD + "\ngroup d8 p=2 gens=(0 1 2 3);(0 2)\nnormal gens=(0 1 2 3);(0 2)\n"
    r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.run(cli.RunConfig(report_path=r1, no_cache=True, jobs=1), corpus) == 0
    assert cli.run(cli.RunConfig(report_path=r2, no_cache=True, jobs=2), corpus) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_failing_entry_sets_exit_one(tmp_path):
    # A5 at p=2 is rejected (its naive locality is not subcentric), which
    # is an axiom fail and must surface as exit status 1
    corpus = "group a5 p=2 gens=(0 1 2 3 4);(0 1 2)\nnormal gens=(0 1 2 3 4);(0 1 2)\n"
    config = cli.RunConfig(report_path=tmp_path / "r.json", no_cache=True, word_len=2)
    assert cli.run(config, corpus) == 1
    doc = json.loads((tmp_path / "r.json").read_text())
    ax = [r for r in doc if r["statement"] == "Axioms"]
    assert ax and ax[0]["outcome"] == "fail"
    skips = [r for r in doc if r["outcome"] == "skipped"]
    assert all(r["reason"] == "entry-rejected" for r in skips)


def test_main_exit_codes(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("group broken\n")
    assert cli.main(["--corpus", str(bad), "--no-cache"]) == 2
    missing = tmp_path / "missing.txt"
    assert cli.main(["--corpus", str(missing), "--no-cache"]) == 2


def test_unwritable_report_is_config_error(tmp_path):
    config = cli.RunConfig(
        report_path=tmp_path / "nope" / "r.json", no_cache=True
    )
    assert cli.run(config, GOOD) == 2


def test_unreadable_cache_dir_is_config_error(tmp_path):
    trap = tmp_path / "trap"
    trap.mkdir()
    (trap / "lattice_cache.json").write_text("{not json")
    config = cli.RunConfig(cache_dir=trap)
    assert cli.run(config, GOOD) == 2


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "cache"
    assert cli.run(cli.RunConfig(cache_dir=cache), GOOD) == 0
    gp._SUBGROUP_CACHE.clear()
    gp._AUT_CACHE.clear()
    cli._load_cache(cache)
    assert gp._SUBGROUP_CACHE and gp._AUT_CACHE
    loaded_subs = {k: {H.elems for H in v} for k, v in gp._SUBGROUP_CACHE.items()}
    loaded_auts = {k: v.maps for k, v in gp._AUT_CACHE.items()}
    # recompute everything from scratch and compare against the disk values
    gp._SUBGROUP_CACHE.clear()
    gp._AUT_CACHE.clear()
    for (deg, elems), subs in loaded_subs.items():
        fresh = {H.elems for H in gp.all_subgroups(gp.FiniteGroup(elems))}
        assert subs == fresh
    for (deg, elems), maps in loaded_auts.items():
        G = gp.FiniteGroup(elems)
        fresh = gp.aut_group(gp.Subgroup(G, elems)).maps
        assert maps == fresh
