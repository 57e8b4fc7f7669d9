#!/usr/bin/env python3
"""End-to-end checks for the ym binary.

Usage: cli_checks.py <path-to-ym> <data-dir> [--verify-all]

The default mode exercises every subcommand: JSON well-formedness, a few known
values, byte-identical reruns, --output file mode, and the exit-code contract
(2 for bad input, 0 for success). With --verify-all it instead runs the full
acceptance battery twice and compares the machine output byte for byte.
"""

import json
import os
import subprocess
import sys
import tempfile

YM = None
DATA = None
failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([YM, *args], capture_output=True)
    if proc.returncode != expect_code:
        failures.append(
            f"ym {' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stderr: {proc.stderr.decode(errors='replace')[:500]}"
        )
        return None
    return proc


def run_json(*args):
    proc = run(*args)
    if proc is None:
        return None
    try:
        return json.loads(proc.stdout.decode())
    except json.JSONDecodeError as e:
        failures.append(f"ym {' '.join(args)}: stdout is not valid JSON: {e}")
        return None


def check(cond, label):
    if not cond:
        failures.append(label)


def data(name):
    return os.path.join(DATA, name)


def check_series():
    doc = run_json("series", "--n", "3", "--D", "8")
    if doc is None:
        return
    check(doc["n"] == 3 and doc["D"] == 8, "series: header fields")
    check(doc["hilbert"][:7] == ["1", "3", "9", "24", "64", "168", "441"],
          f"series: hilbert coefficients, got {doc['hilbert'][:7]}")
    check(doc["lie_dims"] == ["3", "3", "5", "10", "24", "50", "120", "270"],
          f"series: lie_dims, got {doc['lie_dims']}")
    check(doc["w"][:5] == ["0", "0", "3", "5", "7"], f"series: w, got {doc['w'][:5]}")
    check(doc["pbw_check"] is True and doc["freeness"] is True, "series: identity flags")

    a = run("series", "--n", "3", "--D", "12")
    b = run("series", "--n", "3", "--D", "12")
    if a and b:
        check(a.stdout == b.stdout, "series: reruns are not byte-identical")
        check(a.stderr != b"", "series: human summary on stderr is empty")


def check_quotient():
    doc = run_json("quotient", "--n", "3", "--l", "4",
                   "--verify-paper-basis", "--identities")
    if doc is None:
        return
    check(doc["dims"] == [3, 3, 5, 10], f"quotient: dims, got {doc['dims']}")
    check(doc["dim"] == 21, "quotient: total dimension")
    check(len(doc["labels"]) == 21 and doc["labels"][0] == "x1"
          and doc["labels"][20] == "x2333", "quotient: labels")
    check(doc["paper_basis"]["size"] == 21, "quotient: paper basis size")
    check(len(doc["identities"]) == 7 and all(e["holds"] for e in doc["identities"]),
          "quotient: identities")

    a = run("quotient", "--n", "3", "--l", "3")
    b = run("quotient", "--n", "3", "--l", "3")
    if a and b:
        check(a.stdout == b.stdout, "quotient: reruns are not byte-identical")


def check_koszul():
    doc = run_json("koszul", "--n", "3", "--max-p", "4")
    if doc is None:
        return
    for s in doc["slices"]:
        p = s["p"]
        expect = [1 if p == 0 else 0, 0 if p == 0 else 2 * p + 1, 0, 0]
        check(s["dims"] == expect, f"koszul: slice {p} dims {s['dims']} != {expect}")
    # w runs one degree past the last slice: degree m is h1 of slice m-1.
    check(doc["w"] == [0, 0, 3, 5, 7, 9], f"koszul: w, got {doc['w']}")


def check_orbit():
    doc = run_json("orbit", "--n", "3", "--l", "2",
                   "--functional", data("f_weight1.json"))
    if doc is None:
        return
    check(doc["radical_dim"] == 4, f"orbit: radical_dim, got {doc['radical_dim']}")
    check(doc["weight"] == 1, f"orbit: weight, got {doc['weight']}")
    check(len(doc["polarization_basis"]) == 5
          and all(len(row) == 6 for row in doc["polarization_basis"]),
          "orbit: polarization basis shape")

    doc3 = run_json("orbit", "--n", "3", "--l", "3",
                    "--functional", data("f_weight3.json"))
    if doc3 is not None:
        check(doc3["weight"] == 3, f"orbit: weight-3 case, got {doc3['weight']}")

    a = run("orbit", "--n", "3", "--l", "2", "--functional", data("f_weight1.json"))
    b = run("orbit", "--n", "3", "--l", "2", "--functional", data("f_weight1.json"))
    if a and b:
        check(a.stdout == b.stdout, "orbit: reruns are not byte-identical")


def check_weylmap():
    doc = run_json("weylmap", "--n", "2", "--l", "2",
                   "--functional", data("f_heis.json"), "--pullback-degree", "2")
    if doc is None:
        return
    check(doc["weight"] == 1, f"weylmap: weight, got {doc['weight']}")
    check(doc["images"]["x1"] == [[[[1], [0]], "1"]],
          f"weylmap: image of x1, got {doc['images']['x1']}")
    check(doc["images"]["x2"] == [[[[0], [1]], "-1"]],
          f"weylmap: image of x2, got {doc['images']['x2']}")
    check(doc["images"]["x12"] == [[[[0], [0]], "1"]],
          f"weylmap: image of x12, got {doc['images']['x12']}")
    check(doc["relator_check"] is True and doc["lie_hom_check"] is True,
          "weylmap: relator/hom checks")
    surj = doc["surjectivity"]
    check(surj["surjective"] is True and surj["depth"] == 1, "weylmap: surjectivity")
    check("p1" in surj["witnesses"] and "q1" in surj["witnesses"],
          "weylmap: witness targets")

    pull = doc["pullback"]
    check(pull["monomials"] == [[0], [1], [2]], "weylmap: pullback monomials")
    check(pull["relator_annihilation"] is True, "weylmap: pullback relators")
    x2_entries = pull["action"][1]["entries"]
    check([1, 2, "-2"] in x2_entries,
          f"weylmap: pullback x2 action on q^2, got {x2_entries}")

    a = run("weylmap", "--n", "2", "--l", "2", "--functional", data("f_heis.json"))
    b = run("weylmap", "--n", "2", "--l", "2", "--functional", data("f_heis.json"))
    if a and b:
        check(a.stdout == b.stdout, "weylmap: reruns are not byte-identical")


def check_output_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "out.json")
        proc = run("series", "--n", "2", "--D", "5", "--output", path)
        if proc is None:
            return
        check(proc.stdout == b"", "output: stdout must be empty with --output")
        with open(path, "rb") as fh:
            doc = json.loads(fh.read().decode())
        check(doc["n"] == 2, "output: file content")


def check_bad_inputs():
    # Domain violations and malformed requests must exit 2 and never dump JSON.
    cases = [
        ("series", "--n", "1", "--D", "4"),
        ("quotient", "--n", "3", "--l", "0"),
        ("koszul", "--n", "1", "--max-p", "2"),
        ("orbit", "--n", "3", "--l", "2", "--functional", data("f_mismatch.json")),
        ("orbit", "--n", "3", "--l", "2", "--functional", data("f_badlabel.json")),
        ("orbit", "--n", "3", "--l", "2", "--functional", data("no_such_file.json")),
        ("weylmap", "--n", "3", "--l", "2", "--functional", data("f_badlabel.json")),
        ("series", "--n", "3"),  # missing required --D
        ("frobnicate",),         # unknown subcommand
    ]
    for args in cases:
        proc = run(*args, expect_code=2)
        if proc is not None:
            check(proc.stdout == b"", f"bad input {args}: stdout not empty")

    help_proc = run("--help", expect_code=0)
    if help_proc is not None:
        check(b"series" in help_proc.stdout, "--help: subcommand listing")


def check_verify_all():
    with tempfile.TemporaryDirectory() as tmp:
        p1 = os.path.join(tmp, "run1.json")
        p2 = os.path.join(tmp, "run2.json")
        r1 = run("verify-all", "--output", p1)
        r2 = run("verify-all", "--output", p2)
        if r1 is None or r2 is None:
            return
        with open(p1, "rb") as fh:
            b1 = fh.read()
        with open(p2, "rb") as fh:
            b2 = fh.read()
        check(b1 == b2, "verify-all: machine output differs between runs")
        doc = json.loads(b1.decode())
        check(doc["all_passed"] is True, "verify-all: criteria failed")
        check(len(doc["criteria"]) == 11, "verify-all: expected eleven criteria")
        for entry in doc["criteria"]:
            check(entry["passed"] is True,
                  f"verify-all: criterion {entry['id']} failed: {entry['detail']}")


def main():
    global YM, DATA
    if len(sys.argv) < 3:
        print("usage: cli_checks.py <ym-binary> <data-dir> [--verify-all]")
        return 2
    YM = sys.argv[1]
    DATA = sys.argv[2]

    if "--verify-all" in sys.argv[3:]:
        check_verify_all()
    else:
        check_series()
        check_quotient()
        check_koszul()
        check_orbit()
        check_weylmap()
        check_output_file()
        check_bad_inputs()

    if failures:
        print(f"{len(failures)} CLI check(s) failed:")
        for f in failures:
            print(" -", f)
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
