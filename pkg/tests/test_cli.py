import json

import pytest

from partfreq.cli import UsageError, main, parse_n_values, parse_partition


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def blocks(tsv):
    return [[line.split("\t") for line in b.splitlines()] for b in tsv.strip().split("\n\n")]


def num(x):
    if x == "":
        return None
    try:
        return int(x)
    except ValueError:
        return x


def flat(x):
    return ",".join(map(str, x)) if isinstance(x, list) else x


def tsv_matches_json(tsv, report):
    """Rebuild the data carried by the TSV output and compare it with the JSON report."""
    bs = blocks(tsv)
    cmd = report["command"]
    if cmd == "orbit-table":
        (table,) = bs
        header = table[0]
        ks = [int(k) for k in header[1:] if not k.startswith("p")]
        got = {}
        for line in table[1:]:
            n = int(line[0])
            for k, v in zip(ks, line[1:]):
                if int(v):
                    got[(n, k)] = int(v)
        want = {(r["n"], r["k"]): r["o_count"] for r in report["rows"]}
        return got == want and [int(line[0]) for line in table[1:]] == report["params"]["n"]
    if cmd == "check":
        verdicts = [
            [v["name"], int(v["pass"])]
            + [flat((v.get("witness") or {}).get(f)) for f in ("key", "index", "left", "right")]
            for v in report["verdicts"]
        ]
        ok = [[num(x) for x in line] for line in bs[0][1:]] == [
            [None if x is None else num(str(x)) for x in row] for row in verdicts]
        cols = report["coefficients"]["columns"]
        if cols:
            table = bs[1]
            ok &= table[0][1:] == list(cols)
            for c_i, name in enumerate(cols, start=1):
                ok &= [int(line[c_i]) for line in table[1:]] == cols[name]
        if report["rows"]:
            ok &= [[int(x) for x in line] for line in bs[-1][1:]] == [
                [r["n"], r["k"], r["o_count"], r["p_count"]] for r in report["rows"]]
        return ok
    (table,) = bs
    keys = table[0]
    return [dict(zip(keys, line)) for line in table[1:]] == [
        {k: str(flat(r[k])) for k in keys} for r in report["rows"]]


COMMANDS = [
    ("orbit-table", "--n", "4..19:5+4", "--m", "5"),
    ("orbit-table", "--n", "0,7", "--m", "2", "--p-counts"),
    ("check", "congruence", "--A", "5", "--B", "4", "--C", "5", "--m", "5", "--nmax", "19"),
    ("check", "orbit2", "--m", "2", "--order", "10"),
    ("check", "pmm", "--m", "3", "--order", "10"),
    ("check", "ady", "--m", "2", "--nmax", "8"),
    ("check", "remark4", "--order", "20"),
    ("glaisher", "--partition", "3,3,3", "--m", "2"),
    ("rotate", "--partition", "4,2,1,1", "--m", "2", "--steps", "3"),
    ("orbit", "--partition", "20,5,5,4,2,2,1,1,1,1,1", "--m", "2"),
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_tsv_and_json_carry_the_same_data(capsys, argv):
    code_t, tsv, _ = run(capsys, *argv)
    code_j, js, _ = run(capsys, *argv, "--format", "json")
    report = json.loads(js)
    assert code_t == code_j
    assert set(report) >= {"command", "params", "rows", "verdicts", "elapsed_ms"}
    assert report["elapsed_ms"] is None
    assert tsv_matches_json(tsv, report)


@pytest.mark.parametrize("argv", COMMANDS[:4], ids=lambda a: " ".join(a[:2]))
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv, "--format", "json")
    assert run(capsys, *argv, "--format", "json") == first


def test_timing_is_opt_in(capsys):
    _, js, _ = run(capsys, "check", "pmm", "--order", "5", "--format", "json", "--timing")
    assert isinstance(json.loads(js)["elapsed_ms"], float)


def test_orbit_table_zero(capsys):
    code, out, _ = run(capsys, "orbit-table", "--n", "0", "--m", "2")
    assert code == 0
    assert out.splitlines() == ["n\t1", "0\t1"]


def test_orbit_table_row_29(capsys):
    _, js, _ = run(capsys, "orbit-table", "--n", "29", "--m", "5", "--format", "json")
    rows = json.loads(js)["rows"]
    assert {r["k"]: r["o_count"] for r in rows} == {1: 1480, 2: 1535, 3: 5}
    assert all(r["p_count"] == r["k"] * r["o_count"] for r in rows)


def test_orbit_size_six(capsys):
    _, out, _ = run(capsys, "orbit", "--partition", "20,5,5,4,2,2,1,1,1,1,1", "--m", "2")
    lines = out.splitlines()
    assert len(lines) == 7
    assert all(line.startswith("6\t") for line in lines[1:])


def test_glaisher_and_rotate(capsys):
    assert run(capsys, "glaisher", "--partition", "3,3,3", "--m", "2")[1].splitlines()[1] == "6,3"
    assert run(capsys, "rotate", "--partition", "1", "--m", "2", "--steps", "7")[1].splitlines()[1] == "1"


def test_unsorted_partition_warns(capsys):
    code, out, err = run(capsys, "glaisher", "--partition", "3,6", "--m", "2")
    assert code == 0 and "warning" in err
    assert out.splitlines()[1] == "3,3,3"


def test_exit_codes(capsys):
    assert run(capsys, "check", "pmm", "--m", "2", "--order", "0")[0] == 0
    assert run(capsys, "check", "congruence", "--A", "5", "--B", "4", "--C", "5", "--m", "5",
               "--nmax", "39")[0] == 0
    assert run(capsys, "check", "corollary8", "--m", "2", "--order", "50")[0] == 0
    # the orbit-size-2 closed form fails against enumeration
    assert run(capsys, "check", "orbit2", "--m", "2", "--order", "8")[0] == 1
    assert run(capsys, "check", "congruence", "--A", "5", "--B", "3", "--C", "5", "--m", "5",
               "--nmax", "13")[0] == 1
    # usage errors
    assert run(capsys, "check", "congruence", "--A", "3", "--B", "1", "--C", "3", "--m", "5")[0] == 2
    assert run(capsys, "check", "congruence", "--A", "5")[0] == 2
    assert run(capsys, "orbit-table", "--n", "1..x", "--m", "5")[0] == 2
    assert run(capsys, "glaisher", "--partition", "3,0", "--m", "2")[0] == 2
    assert run(capsys, "check", "pmm", "--order", "-1")[0] == 2
    for argv in (["check", "nosuch"], ["glaisher", "--partition", "1", "--m", "1"], []):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 2
    capsys.readouterr()


def test_parse_n_values():
    assert parse_n_values("7") == [7]
    assert parse_n_values("4,9") == [4, 9]
    assert parse_n_values("3..6") == [3, 4, 5, 6]
    assert parse_n_values("4..39:5+4") == [4, 9, 14, 19, 24, 29, 34, 39]
    assert parse_n_values("0..10:3+1") == [1, 4, 7, 10]
    for bad in ("", "a", "1..", "1..5:0+1"):
        with pytest.raises(UsageError):
            parse_n_values(bad)


def test_parse_partition():
    assert parse_partition("3, 1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    with pytest.raises(UsageError):
        parse_partition("3,x")
