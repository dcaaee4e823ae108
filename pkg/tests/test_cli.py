import json

from gpdescent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_stats_worked_example(capsys):
    code, out, _ = run(capsys, "stats", "3,5,1,2,4")
    assert code == 0
    payload = json.loads(out)
    assert payload["inv"] == 5
    assert payload["maj"] == 2
    assert payload["Des"] == [2]
    assert sorted(map(tuple, payload["Inv"])) == [
        (3, 1),
        (3, 2),
        (5, 1),
        (5, 2),
        (5, 4),
    ]


def test_stats_majt(capsys):
    code, out, _ = run(capsys, "stats", "3,4,1,5,2")
    payload = json.loads(out)
    assert payload["majt"] == [1, 0, 2, 2, 1]
    assert payload["invt"] == [2, 3, 0, 0, 0]


def test_stats_table_format(capsys):
    code, out, _ = run(capsys, "--format", "table", "stats", "1,2,3")
    assert code == 0
    assert "maj: 0" in out


def test_stats_rejects_malformed(capsys):
    code, _, err = run(capsys, "stats", "1,1,2")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "stats", "1,x")
    assert code == 2


def test_enumerate_d_31(capsys):
    code, out, _ = run(capsys, "enumerate", "D", "3,1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 13  # 12 elements + summary
    assert json.loads(lines[0]) == {"composition": [0, 0, 0, 0]}
    assert json.loads(lines[-1]) == {"count": 12, "multinomial": 12}


def test_enumerate_r0_31(capsys):
    code, out, _ = run(capsys, "enumerate", "R0", "3,1")
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"count": 12, "multinomial": 12}


def test_enumerate_jmaj_single_row(capsys):
    code, out, _ = run(capsys, "enumerate", "Jmaj", "3")
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"count": 6, "multinomial": 6}


def test_enumerate_pf0(capsys):
    code, out, _ = run(capsys, "enumerate", "PF0", "3,1")
    lines = out.strip().splitlines()
    assert json.loads(lines[-1])["count"] == 12


def test_enumerate_rejects_non_partition(capsys):
    code, _, err = run(capsys, "enumerate", "D", "1,3")
    assert code == 2


def test_enumerate_bound(capsys):
    code, _, err = run(capsys, "--n-bound", "3", "enumerate", "D", "3,1")
    assert code == 3
    assert "bound" in err


def test_hall_littlewood_both_routes(capsys):
    code, out, _ = run(capsys, "hall-littlewood", "2,1,1")
    assert code == 0
    assert "# routes agree" in out
    lines = [json.loads(l) for l in out.splitlines() if l.startswith("{")]
    by_mu = {tuple(item["mu"]): item["coeffs"] for item in lines[: len(lines) // 2]}
    assert by_mu[(1, 1, 1, 1)] == {"0": 1, "1": 3, "2": 5, "3": 3}


def test_hall_littlewood_twisted(capsys):
    code, out, _ = run(capsys, "hall-littlewood", "2,2,1", "--route", "descents", "--twisted")
    items = [json.loads(l) for l in out.splitlines()]
    by_mu = {tuple(item["mu"]): item["coeffs"] for item in items}
    assert by_mu[(3, 2)] == {"4": 1}


def test_hall_littlewood_table(capsys):
    code, out, _ = run(capsys, "--format", "table", "hall-littlewood", "1,1", "--route", "descents")
    assert code == 0
    assert "m[1,1]: 1 + t" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "2,2", "--checks", "basis,leading,minimal-ribbons")
    assert code == 0
    payload = json.loads(out.strip().splitlines()[-1])
    assert payload["basis_ok"] is True
    assert payload["leading_terms_ok"] is True
    assert payload["minimal_ribbons_ok"] is True


def test_verify_hilbert_line(capsys):
    code, out, _ = run(capsys, "verify", "4", "--checks", "basis")
    assert code == 0
    payload = json.loads(out.strip().splitlines()[-1])
    assert payload["hilbert"] == {"0": 1, "1": 3, "2": 5, "3": 6, "4": 5, "5": 3, "6": 1}


def test_verify_parabolic_cases(capsys):
    code, out, _ = run(capsys, "verify", "3,1", "--checks", "parabolic")
    assert code == 0
    payload = json.loads(out.strip().splitlines()[-1])
    assert payload["checks"]["parabolic"] is True
    assert len(payload["parabolic"]) == 5
    assert all(case["ok"] for case in payload["parabolic"])


def test_verify_full_document_shape(capsys):
    code, out, _ = run(capsys, "verify", "2,1")
    assert code == 0
    payload = json.loads(out.strip().splitlines()[-1])
    assert payload["lambda"] == [2, 1]
    assert set(payload["checks"]) == {
        "basis",
        "leading",
        "parabolic",
        "phi",
        "minimal-ribbons",
    }
    assert all(payload["checks"].values())


def test_route_disagreement_exit_code(capsys, monkeypatch):
    import gpdescent.cli as cli_module
    from gpdescent.symfunc import TPoly

    def broken(lam, twisted=False):
        return {(sum(lam),): TPoly({99: 1})}

    monkeypatch.setattr(cli_module.symfunc, "hall_littlewood_by_ribbons", broken)
    code, _, err = run(capsys, "hall-littlewood", "2,1")
    assert code == 4
    assert "disagree" in err


def test_verify_bound(capsys):
    code, _, err = run(capsys, "--n-bound", "3", "verify", "4", "--checks", "basis")
    assert code == 3


def test_deterministic_output(capsys):
    first = run(capsys, "enumerate", "D", "2,2")
    second = run(capsys, "enumerate", "D", "2,2")
    assert first == second


def test_env_var_overrides_default_bound(capsys, monkeypatch):
    monkeypatch.setenv("GPDESCENT_N_BOUND", "3")
    code, _, err = run(capsys, "enumerate", "D", "3,1")
    assert code == 3
    monkeypatch.setenv("GPDESCENT_N_BOUND", "4")
    code, out, _ = run(capsys, "enumerate", "D", "3,1")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1])["count"] == 12


def test_shared_flags_accepted_after_subcommand(capsys):
    before = run(capsys, "--format", "table", "enumerate", "D", "2,1")
    after = run(capsys, "enumerate", "D", "2,1", "--format", "table")
    assert before == after
    assert "count: 3" in after[1]


def test_default_verify_skips_phi_above_its_bound(capsys):
    # n = 5 exceeds the splitting-map default bound; the implied check is
    # skipped rather than failing the whole run
    code, out, _ = run(capsys, "verify", "3,2", "--checks", "basis")
    assert code == 0
    code, out, _ = run(capsys, "verify", "2,2,1", "--checks", "basis,phi")
    assert code == 3  # explicit request above the bound is an error
