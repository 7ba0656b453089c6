"""End-to-end runs of every subcommand through main()."""

import json

from dualpart.cli import main
from dualpart.serialization import group_from_json, partition_from_json, poset_from_json

Z6_PARTITION = '{"blocks":[[[0]],[[1],[3],[5]],[[2],[4]]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_dual_worked_example(capsys):
    code, doc = run(capsys, "dual", "--group", '{"orders":[6]}',
                    "--partition", Z6_PARTITION)
    assert code == 0
    assert doc["dual"]["blocks"] == [[[0]], [[1], [2], [4], [5]], [[3]]]
    assert doc["reflexive"] is True
    assert doc["krawtchouk"]["entries"] == [[1, 3, 2], [1, 0, -1], [1, -3, 2]]
    # output round-trips through the parsers
    g = group_from_json(doc["group"])
    assert partition_from_json(doc["dual"], g).num_blocks == 3


def test_bidual_and_reflexive(capsys):
    part = '{"blocks":[[[0]],[[1],[2]],[[3],[4],[5]]]}'
    code, doc = run(capsys, "bidual", "--group", '{"orders":[6]}', "--partition", part)
    assert code == 0
    assert doc["reflexive"] is False
    assert len(doc["bidual"]["blocks"]) == 6
    code, doc = run(capsys, "reflexive", "--group", '{"orders":[6]}', "--partition", part)
    assert code == 0
    assert doc["reflexive"] is False
    assert doc["partition_blocks"] == 3 and doc["dual_blocks"] == 5


def test_byte_identical_reruns(capsys):
    argv = ["dual", "--group", '{"orders":[6]}', "--partition", Z6_PARTITION]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_krawtchouk_default_char_partition(capsys):
    code, doc = run(capsys, "krawtchouk", "--group", '{"orders":[6]}',
                    "--partition", Z6_PARTITION)
    assert code == 0
    assert doc["char_partition"]["blocks"] == [[[0]], [[1], [2], [4], [5]], [[3]]]
    assert doc["krawtchouk"]["entries"] == [[1, 3, 2], [1, 0, -1], [1, -3, 2]]


def test_macwilliams_command(capsys):
    code, doc = run(
        capsys, "macwilliams", "--group", '{"orders":[6]}',
        "--partition", '{"blocks":[[[0]],[[1],[2],[4],[5]],[[3]]]}',
        "--code", '{"generators":[[3]]}',
    )
    assert code == 0
    assert doc["a"] == [1, 1, 0]
    assert doc["b"] == [1, 2, 0]
    assert doc["krawtchouk"]["entries"] == [[1, 4, 1], [1, 0, -1], [1, -2, 1]]
    assert doc["verified"] is True
    assert doc["dual_code"]["elements"] == [[0], [2], [4]]


def test_product_command_with_code(capsys):
    code, doc = run(
        capsys, "product", "--group", '{"orders":[2]}',
        "--partition", '{"blocks":[[[0]],[[1]]]}', "--copies", "3",
        "--check", "--code", '{"generators":[[1,1,1]]}',
    )
    assert code == 0
    assert doc["group"]["orders"] == [2, 2, 2]
    assert doc["duality"]["commutes"] is True
    assert doc["verified"] is True
    assert {tuple(e["key"]): e["count"] for e in doc["enumerator"]} == {
        (0, 0, 0): 1, (1, 1, 1): 1,
    }


def test_symmetrize_command(capsys):
    code, doc = run(
        capsys, "symmetrize", "--group", '{"orders":[2]}',
        "--partition", '{"blocks":[[[0]],[[1]]]}', "--copies", "3",
        "--check", "--code", '{"generators":[[1,1,1]]}',
    )
    assert code == 0
    assert doc["duality"]["commutes"] is True
    assert {tuple(e["key"]): e["count"] for e in doc["transform"]} == {
        (3, 0): 1, (1, 2): 3,
    }


def test_symmetrize_single_block_counterexample(capsys):
    code, doc = run(
        capsys, "symmetrize", "--group", '{"orders":[3]}',
        "--partition", '{"blocks":[[[0],[1],[2]]]}', "--copies", "2", "--check",
    )
    assert code == 0
    assert doc["duality"]["commutes"] is False
    assert doc["duality"]["witness"] is not None


def test_poset_commands(capsys):
    poset = '{"n":3,"cover":[[1,2],[2,3]]}'
    code, doc = run(capsys, "poset-partition", "--group", '{"orders":[2,2,2]}',
                    "--poset", poset)
    assert code == 0
    assert [len(b) for b in doc["by_weight"]] == [1, 1, 2, 4]
    assert poset_from_json(doc["poset"]).n == 3

    code, doc = run(capsys, "poset-krawtchouk", "--group", '{"orders":[2,2,2]}',
                    "--poset", poset)
    assert code == 0
    assert doc["matrix"] == [
        [1, 1, 2, 4], [1, 1, 2, -4], [1, 1, -2, 0], [1, -1, 0, 0],
    ]
    assert doc["closed_form_matches"] is True

    code, doc = run(capsys, "poset-check", "--group", '{"orders":[2,2,2]}',
                    "--poset", poset)
    assert code == 0
    assert doc["equal"] is True and doc["hierarchical"] is True
    assert doc["levels"] == [1, 1, 1]


def test_poset_check_non_hierarchical(capsys):
    poset = '{"n":4,"cover":[[1,3],[2,3],[2,4]]}'
    code, doc = run(capsys, "poset-check", "--group", '{"orders":[2,2,2,2]}',
                    "--poset", poset)
    assert code == 0
    assert doc["hierarchical"] is False and doc["equal"] is False


def test_subgroups_command(capsys):
    code, doc = run(capsys, "subgroups", "--group", '{"orders":[2,2]}',
                    "--include-elements")
    assert code == 0
    assert doc["count"] == 5
    sizes = sorted(row["size"] for row in doc["subgroups"])
    assert sizes == [1, 2, 2, 2, 4]
    for row in doc["subgroups"]:
        assert "dual_generators" in row


def test_check_command(capsys):
    code, doc = run(capsys, "check", "--suite", "cyclotomic")
    assert code == 0
    assert doc["failed"] == 0
    assert all(r["passed"] for r in doc["results"])


def test_exit_code_input_error(capsys):
    code = main(["dual", "--group", "not json", "--partition", Z6_PARTITION])
    assert code == 1
    assert "error" in capsys.readouterr().err
    code = main(["dual", "--group", '{"orders":[6]}',
                 "--partition", '{"blocks":[[[0]]]}'])
    assert code == 1
    # unknown subcommand goes through the same path, not argparse's exit(2)
    code = main(["frobnicate"])
    assert code == 1


def test_exit_code_guard(capsys):
    code = main(["subgroups", "--group", '{"orders":[64,64]}'])
    assert code == 2
    assert "guard" in capsys.readouterr().err


def test_exit_code_verification(capsys):
    code = main([
        "krawtchouk", "--group", '{"orders":[6]}', "--partition", Z6_PARTITION,
        "--char-partition", '{"blocks":[[[0],[1]],[[2],[3],[4],[5]]]}',
    ])
    assert code == 3
    assert "verification" in capsys.readouterr().err


def test_guard_override(capsys):
    code, doc = run(capsys, "subgroups", "--group", '{"orders":[100]}',
                    "--max-group", "100")
    assert code == 0
    assert doc["count"] == 9


def test_file_and_stdin_payloads(tmp_path, capsys, monkeypatch):
    fp = tmp_path / "part.json"
    fp.write_text(Z6_PARTITION)
    code, doc = run(capsys, "dual", "--group", '{"orders":[6]}',
                    "--partition", f"@{fp}")
    assert code == 0
    assert doc["reflexive"] is True

    import io
    monkeypatch.setattr("sys.stdin", io.StringIO('{"orders":[6]}'))
    code, doc = run(capsys, "dual", "--group", "-", "--partition", Z6_PARTITION)
    assert code == 0
    assert doc["group"]["orders"] == [6]
