import json


from strongmax.cli import EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == EXIT_OK
    assert "tardos" in json.loads(out)["constructions"]


def test_catalog_edge(capsys):
    code, out, _ = run(capsys, "catalog", "edge",
                       "--construction", "tardos", "--x", "2", "--y", "3")
    assert code == EXIT_OK
    assert json.loads(out)["points"] == [[2, 1], [2, 2], [2, 3], [3, 3], [4, 3]]


def test_gadget_build_text_emit(capsys):
    code, out, _ = run(capsys, "--emit", "text", "gadget", "build", "--k", "3")
    assert code == EXIT_OK
    assert "outer_edges:" in out


def test_verify_and_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"variant": "cofinite", "complement": [3]}))
    code, out, _ = run(capsys, "verify", "--input", str(good))
    assert code == EXIT_OK
    assert json.loads(out)["valid"] is True

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"variant": "cofinite", "complement": [2, 4]}))
    code, out, _ = run(capsys, "verify", "--input", str(bad))
    assert code == EXIT_INVALID

    code, _, err = run(capsys, "verify", "--input", str(tmp_path / "no.json"))
    assert code == EXIT_INVALID
    assert "error" in err


def test_improve_writes_output(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({
        "variant": "explicit", "construction": "tardos",
        "kind": "matching", "edges": [{"x": 1, "y": 1}],
    }))
    out_file = tmp_path / "next.json"
    code, out, _ = run(capsys, "--bound", "6", "improve",
                       "--input", str(seed), "--out", str(out_file))
    assert code == EXIT_OK
    assert json.loads(out)["witnesses"][0]["delta"] == [1, 2]
    final = json.loads(out_file.read_text())
    assert len(final["edges"]) == 2


def test_demo_is_byte_identical_and_logs_time_to_stderr(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({
        "variant": "explicit", "construction": "tardos",
        "kind": "matching", "edges": [],
    }))
    runs = []
    for _ in range(2):
        code, out, err = run(capsys, "--bound", "6", "demo",
                             "--input", str(seed), "--steps", "3")
        assert code == EXIT_OK
        assert "wall_time_ms" in err
        assert "wall_time_ms" not in out
        runs.append(out)
    assert runs[0] == runs[1]


def test_lab_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "lab", "gadget-lemmas", "--k-max", "4")
    assert code == EXIT_OK
    assert json.loads(out)["all_hold"] is True

    h = tmp_path / "h.json"
    h.write_text(json.dumps({
        "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]],
    }))
    code, out, _ = run(capsys, "lab", "brute", "--input", str(h),
                       "--what", "covers")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 1


def test_invalid_presentation_json_is_a_user_error(tmp_path, capsys):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"variant": "martian"}))
    code, _, err = run(capsys, "verify", "--input", str(p))
    assert code == EXIT_INVALID
    assert "error" in err


def test_flags_accepted_after_subcommand(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({
        "variant": "explicit", "construction": "tardos",
        "kind": "matching", "edges": [{"x": 1, "y": 1}],
    }))
    code, out, _ = run(capsys, "verify", "--input", str(seed),
                       "--construction", "tardos", "--bound", "6")
    assert code == EXIT_OK
    assert json.loads(out)["bound"] == 6


def test_construction_mismatch_is_a_user_error(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({
        "variant": "explicit", "construction": "tardos",
        "kind": "matching", "edges": [],
    }))
    code, _, err = run(capsys, "improve", "--input", str(seed),
                       "--construction", "h1star")
    assert code == EXIT_INVALID
    assert "tardos" in err
