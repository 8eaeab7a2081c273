import io
import json

import pytest

from digitroot import eth_root, isqrt_trace
from digitroot.cli import main, render_trace


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_root_fifth_power():
    assert run("root", "3200000", "--exp", "5")[:2] == (
        0,
        "20 (perfect 5th power, remainder 0)\n",
    )


def test_root_not_perfect():
    code, out, _ = run("root", "126", "-e", "3")
    assert code == 0 and out == "5 (not a perfect 3rd power, remainder 1)\n"


@pytest.mark.parametrize("method", ["binary_search", "newton"])
def test_root_oracle_methods(method):
    code, out, _ = run("root", "3200001", "-e", "5", "--method", method)
    assert out == "20 (not a perfect 5th power, remainder 1)\n"


def test_trace_requires_digit_method():
    code, _, err = run("root", "99", "-e", "2", "--trace", "--method", "newton")
    assert code == 2 and "trace" in err


def test_sqrt():
    assert run("sqrt", "2", "--digits", "10")[:2] == (0, "1.4142135623\n")


def test_frac_root():
    assert run("frac-root", "2", "-e", "7", "-k", "10")[:2] == (0, "1.1040895136\n")


def test_check_power_exit_codes():
    assert run("check-power", "126", "--exp", "3")[:2] == (1, "no: floor root 5, remainder 1\n")
    assert run("check-power", "125", "--exp", "3")[:2] == (0, "yes: 5^3\n")


def test_scan_power():
    assert run("scan-power", "64")[:2] == (0, "2^6\n")
    assert run("scan-power", "64", "--all")[:2] == (0, "2^6\n4^3\n8^2\n")
    assert run("scan-power", "7")[:2] == (1, "none\n")


@pytest.mark.parametrize(
    "argv",
    [
        ("root", "12a", "-e", "2"),
        ("root", "-5", "-e", "2"),
        ("root", "10", "-e", "1"),
        ("check-power", "10", "-e", "0"),
        ("sqrt", "2", "-k", "-1"),
        ("root", "10"),
        ("frobnicate",),
    ],
)
def test_invalid_input_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err


def test_stdin_and_file(tmp_path, monkeypatch):
    big = 12345678901234567890**7
    monkeypatch.setattr("sys.stdin", io.StringIO(f"{big}\n"))
    assert run("check-power", "-", "-e", "7")[:2] == (0, "yes: 12345678901234567890^7\n")
    f = tmp_path / "n.txt"
    f.write_text(str(big))
    assert run("root", f"@{f}", "-e", "7")[0] == 0
    assert run("root", f"@{tmp_path / 'missing'}", "-e", "7")[0] == 2


def test_json_values_are_strings():
    big = 10**40 + 3
    code, out, _ = run("root", str(big), "-e", "2", "--json", "--trace")
    doc = json.loads(out)
    assert doc["radicand"] == str(big) and isinstance(doc["root"], str)
    assert all(isinstance(r["remainder"], str) for r in doc["trace"])


def test_render_trace_table_cube():
    text = render_trace(eth_root(125, 3, trace=True).trace)
    header, rule, row = text.splitlines()
    assert header.split()[:2] == ["Step", "Block"]
    assert row.split() == ["0", "125", "125", "5", "125", "0", "5"]


def test_render_trace_json_sqrt():
    doc = json.loads(render_trace(isqrt_trace(12321)[1], "json"))
    assert len(doc) == 3
    assert doc[-1]["root"] == "111"
    assert list(doc[0]) == [
        "step", "block", "scaled_remainder", "digit", "increment", "remainder", "root"
    ]


def test_render_trace_empty():
    with pytest.raises(ValueError):
        render_trace([])


def test_sqrt_trace_and_json():
    code, out, _ = run("sqrt", "2", "-k", "3", "--trace")
    assert out.splitlines()[-1] == "1.414"
    doc = json.loads(run("sqrt", "2", "-k", "3", "--json")[1])
    assert doc["value"] == "1.414" and doc["scaled_root"] == "1414"


def test_deterministic_output():
    a = run("scan-power", str(3**60), "--all", "--json")
    assert a == run("scan-power", str(3**60), "--all", "--json")


def test_bench_csv():
    code, out, _ = run("bench", "-e", "2", "-L", "20", "40", "--reps", "1")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "method,e,L,k,median_ns,reps,checksum"
    assert len(lines) == 1 + 2 * 3


def test_bench_json():
    code, out, _ = run("bench", "-e", "3", "-L", "10", "20", "30", "--reps", "1", "--format", "json")
    doc = json.loads(out)
    assert len(doc["growth"]) == 3


def test_huge_radicand_over_stdin(monkeypatch):
    r = 7**6000  # squares to ~10000 digits
    monkeypatch.setattr("sys.stdin", io.StringIO(_dec(r * r)))
    code, out, _ = run("root", "-", "-e", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["perfect"] and doc["root"] == _dec(r)


def _dec(n):
    from digitroot.blocks import to_decimal

    return to_decimal(n)
