"""Command-line interface: exit codes, output formats, error reporting."""

import json

import pytest

from gamma3 import textio
from gamma3.cli import main
from gamma3.multigraph import Multigraph


def _write(tmp_path, name, named_graphs):
    p = tmp_path / name
    p.write_text(textio.serialize_graphs(named_graphs))
    return str(p)


def _cycle(k):
    return Multigraph.from_simple_edges(k, [(i, (i + 1) % k) for i in range(k)])


def _petersen():
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
    )
    return Multigraph.from_simple_edges(10, edges)


# -- exit codes -----------------------------------------------------------


def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_missing_file_is_input_error(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_reports_line_number(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("graph g\nvertices 3\nedge 0 9\nend\n")
    assert main(["check", str(p)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "3" in err  # offending line is named


# -- check ----------------------------------------------------------------


def test_check_pass_and_fail(tmp_path, capsys):
    good = _write(tmp_path, "good.txt", [("pet", _petersen())])
    assert main(["check", good]) == 0
    out = capsys.readouterr().out
    assert "gate pass" in out
    bad = _write(tmp_path, "bad.txt", [("c7", _cycle(7))])
    assert main(["check", bad]) == 1
    out = capsys.readouterr().out
    assert "fail" in out


def test_check_json_mode(tmp_path, capsys):
    good = _write(tmp_path, "good.txt", [("pet", _petersen())])
    assert main(["--json", "check", good]) == 0
    lines = [json.loads(ln) for ln in capsys.readouterr().out.splitlines()]
    assert any(e.get("event") == "gate" and e["ok"] for e in lines)
    assert any(e.get("manifest") == "check" for e in lines)


# -- hamcon / verify round trip --------------------------------------------


def test_hamcon_verify_round_trip(tmp_path, capsys):
    # line graph of the doubled triangle is small and Hamilton-connected
    tri2 = Multigraph.build(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)])
    from gamma3.linegraph import line_graph

    fam = _write(tmp_path, "fam.txt", [("g", line_graph(tri2))])
    cert = str(tmp_path / "certs.txt")
    assert main(["hamcon", fam, "--cert", cert]) == 0
    assert main(["verify", fam, cert]) == 0


def test_hamcon_false_prints_witness(tmp_path, capsys):
    fam = _write(tmp_path, "fam.txt", [("c5", _cycle(5))])
    assert main(["hamcon", fam]) == 1
    assert "false witness" in capsys.readouterr().out


def test_verify_detects_tampered_certificates(tmp_path, capsys):
    tri2 = Multigraph.build(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)])
    from gamma3.linegraph import line_graph

    fam = _write(tmp_path, "fam.txt", [("g", line_graph(tri2))])
    cert = str(tmp_path / "certs.txt")
    assert main(["hamcon", fam, "--cert", cert]) == 0
    capsys.readouterr()
    text = open(cert).read()
    lines = text.splitlines()
    # corrupt the first path line: swap two interior vertices of the body
    for i, ln in enumerate(lines):
        parts = ln.split()
        if parts and parts[0] == "path":
            parts[5], parts[6] = parts[6], parts[5]
            lines[i] = " ".join(parts)
            break
    open(cert, "w").write("\n".join(lines) + "\n")
    assert main(["verify", fam, cert]) == 1
    assert "fail" in capsys.readouterr().out


def test_verify_missing_certificate(tmp_path, capsys):
    fam = _write(tmp_path, "fam.txt", [("c5", _cycle(5))])
    cert = str(tmp_path / "certs.txt")
    open(cert, "w").write("")
    assert main(["verify", fam, cert]) == 1
    assert "no-certificate" in capsys.readouterr().out


# -- structural verbs -------------------------------------------------------


def test_linegraph_and_preimage_round_trip(tmp_path, capsys):
    src = _write(tmp_path, "h.txt", [("c7", _cycle(7))])
    assert main(["linegraph", src]) == 0
    out = capsys.readouterr().out
    lg = tmp_path / "lg.txt"
    lg.write_text(out)
    assert main(["preimage", str(lg)]) == 0
    out2 = capsys.readouterr().out
    graphs = textio.parse_graphs(out2)
    assert graphs[0][1].n == 7


def test_preimage_obstruction(tmp_path, capsys):
    # K_{1,3} is not a line graph of any multigraph
    claw = Multigraph.from_simple_edges(4, [(0, 1), (0, 2), (0, 3)])
    src = _write(tmp_path, "claw.txt", [("claw", claw)])
    assert main(["preimage", src]) == 1
    assert "obstruction" in capsys.readouterr().out


def test_core_verb(tmp_path, capsys):
    tri = _cycle(3)
    host = tri.with_pendant(0).with_pendant(1).with_pendant(2)
    src = _write(tmp_path, "h.txt", [("t", host)])
    assert main(["core", src]) == 0
    out = capsys.readouterr().out
    graphs = textio.parse_graphs(out)
    assert graphs[0][1].n == 3


def test_sst_verb(tmp_path, capsys):
    k4 = Multigraph.complete(4)
    src = _write(tmp_path, "k4.txt", [("k4", k4)])
    assert main(["sst", src]) == 0
    w = _write(tmp_path, "w.txt", [("w", _cycle(8)
               .with_edge(0, 4).with_edge(1, 5).with_edge(2, 6).with_edge(3, 7))])
    assert main(["sst", w]) == 1


def test_closure_ops(tmp_path, capsys):
    # diamond: closure completes it to K4
    d = Multigraph.from_simple_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    src = _write(tmp_path, "d.txt", [("d", d)])
    assert main(["closure", src, "--op", "cl"]) == 0
    out = capsys.readouterr().out
    cl = textio.parse_graphs(out)[0][1]
    assert cl.num_edge_copies() == 6  # K4
    assert main(["closure", src, "--op", "eligible"]) == 0
    assert main(["closure", src, "--op", "local:1"]) == 0
    assert main(["closure", src, "--op", "bogus"]) == 2


def test_pattern_verbs(capsys):
    assert main(["pattern", "list"]) == 0
    names = [ln.split()[0] for ln in capsys.readouterr().out.splitlines()
             if ln and not ln.startswith("#")]
    assert "wagner" in names
    assert main(["pattern", "show", "wagner"]) == 0
    out = capsys.readouterr().out
    g = textio.parse_graphs(out)[0][1]
    assert g.n == 8 and g.num_edge_copies() == 12
    assert main(["pattern", "show", "no-such-pattern"]) == 2


# -- search (budgeted smoke) and wagner-claim -------------------------------


def test_search_budgeted_smoke(tmp_path, capsys):
    out = str(tmp_path / "fam.txt")
    code = main(["search", "--budget", "3", "--out", out])
    assert code in (0, 1)  # 1 = budget exhausted, still well-formed output
    err_out = capsys.readouterr()
    assert "complete=" in err_out.out


@pytest.mark.slow
def test_wagner_claim_exit_zero(capsys):
    assert main(["wagner-claim"]) == 0
    out = capsys.readouterr().out
    assert "cases 12288" in out
    assert "survivors == {W3}: true" in out
