#!/usr/bin/env python3
"""Integration checks for the lfkit binary: exit codes, frozen outputs,
file round trips and determinism. Usage: cli_tests.py <path-to-lfkit>."""

import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = Path(sys.argv[1]).resolve()
FAILURES = []


def run(*args, stdin=None):
    proc = subprocess.run([str(BINARY), *args], capture_output=True, text=True, input=stdin)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, cond, detail=""):
    if cond:
        print(f"ok   {name}")
    else:
        print(f"FAIL {name}  {detail}")
        FAILURES.append(name)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="lfkit_cli_"))

    # exit code taxonomy
    rc, out, _ = run("primes", "--limit", "100")
    check("primes count", rc == 0 and out.strip() == "25", f"rc={rc} out={out!r}")
    rc, _, _ = run("primes")
    check("missing required flag is usage error", rc == 2, f"rc={rc}")
    rc, _, _ = run("frobnicate")
    check("unknown subcommand is usage error", rc == 2, f"rc={rc}")
    rc, _, _ = run("compare", "--a", "x", "--b", "y", "--grid", "16", "--mode", "bogus")
    check("unknown mode is usage error", rc == 2, f"rc={rc}")
    rc, _, err = run("expand", "--in", str(tmp / "absent.tsv"), "--limit", "10")
    check("missing file is data error", rc == 3 and "cannot open" in err, f"rc={rc} err={err!r}")

    rc, out, _ = run("primes", "--limit", "1000000", "--theta", "1000000", "--recip", "1000000")
    lines = out.splitlines()
    theta, recip = float(lines[0]), float(lines[1])
    check("theta(1e6)", abs(theta - 998484.175) < 0.1, f"theta={theta}")
    check("sum 1/p at 1e6", abs(recip - 2.887328) < 1e-5, f"recip={recip}")

    # curve count: frozen rows for y^2 = x^3 - x
    rc, out, _ = run("curve", "count", "--poly", "0,-1,0,1", "--pmax", "7")
    expected = "p,N1,N2,a_p,poly_coeffs\n3,4,,0,1;0;3\n5,8,,-2,1;2;5\n7,8,,0,1;0;7\n"
    check("curve count cubic", rc == 0 and out == expected, f"rc={rc} out={out!r}")

    rc, out, _ = run("curve", "count", "--poly", "1,0,0,0,0,1", "--pmax", "7", "--ext")
    rows = {line.split(",")[0]: line.split(",") for line in out.strip().splitlines()[1:]}
    check("quintic N2(3)", rc == 0 and rows["3"][2] == "10", f"out={out!r}")
    check("quintic N2(7)", rows["7"][2] == "50", f"out={out!r}")
    check("quintic local poly degree 4", rows["3"][4].count(";") == 4, f"out={out!r}")

    rc, _, err = run("curve", "count", "--poly", "0,0,0,1", "--pmax", "7")
    check("singular model is data error", rc == 3 and "singular" in err, f"rc={rc} err={err!r}")
    rc, _, err = run("curve", "count", "--poly", "0,-1,0,1", "--pmax", "5000", "--ext")
    check("ext bound enforced", rc == 3 and "3163" in err, f"rc={rc} err={err!r}")

    # expand: zeta-style degree 1 file gives a(n) = 1 everywhere
    sat = tmp / "one.tsv"
    sat.write_text("# satake v1 degree=1\n2\t1,0\n3\t1,0\n5\t1,0\n7\t1,0\n")
    rc, out, _ = run("expand", "--in", str(sat), "--limit", "10")
    body = [l for l in out.splitlines() if not l.startswith("#")]
    check("expand zeta", rc == 0 and len(body) == 10 and all(l.split("\t")[1] == "1" for l in body),
          f"rc={rc} out={out!r}")
    check("expand header", out.startswith("# lcoef v1 degree=1\n# limit=10\n"), f"out={out!r}")

    bad_sat = tmp / "gap.tsv"
    bad_sat.write_text("# satake v1 degree=1\n2\t1,0\n7\t1,0\n")
    rc, _, err = run("expand", "--in", str(bad_sat), "--limit", "10")
    check("expand coverage gap", rc == 3 and "no local series at prime 3" in err,
          f"rc={rc} err={err!r}")

    # power: sym^2 squares the single root of a degree 1 object
    rc, out, _ = run("power", "--kind", "sym", "--n", "2", "--in", str(sat))
    check("power sym2 degree", rc == 0 and out.startswith("# satake v1 degree=1\n"),
          f"rc={rc} out={out!r}")
    mixed = tmp / "mixed.tsv"
    mixed.write_text("# satake v1 degree=2\n2\t0,0\n3\t2,0;0.5,0\n")
    rc, out, err = run("power", "--kind", "ext", "--n", "2", "--in", str(mixed))
    check("power drops bad prime", rc == 0 and "dropping bad prime 2" in err, f"err={err!r}")
    check("power ext2 value", out == "# satake v1 degree=1\n3\t1,0\n", f"out={out!r}")
    rc, _, err = run("power", "--kind", "ext", "--n", "3", "--in", str(mixed))
    check("power ext beyond degree", rc == 3 and "undefined" in err, f"rc={rc} err={err!r}")

    # fe: generate, validate, reject
    spin = tmp / "spin.json"
    rc, _, _ = run("fe", "spin", "--weight", "20", "--out", str(spin))
    rc2, out, _ = run("fe", "validate", "--file", str(spin))
    check("fe spin validates", rc == 0 and rc2 == 0 and "tempered\tok" in out and
          "selberg\tok" in out, f"rc={rc},{rc2} out={out!r}")

    hw = tmp / "hw.json"
    rc, _, _ = run("fe", "hasse-weil", "--genus", "2", "--conductor", "389", "--sign", "-1",
                   "--out", str(hw))
    check("fe hasse-weil emits", rc == 0 and '"degree": 4' in hw.read_text(), f"rc={rc}")

    bad_fe = tmp / "bad.json"
    bad_fe.write_text('{"degree":3,"conductor":1,"mu":[[0.3,0]],"nu":[[-0.5,0]],"epsilon":[1,0]}')
    rc, out, _ = run("fe", "validate", "--file", str(bad_fe))
    check("fe validate rejects", rc == 3 and "Re(mu[0]) = 0.3" in out and
          "Re(nu[0]) = -0.5" in out, f"rc={rc} out={out!r}")

    # siegel eigen at a frozen point
    rc, out, _ = run("siegel", "eigen", "--weight", "10", "--p", "2", "--alpha", "1,0",
                     "--beta", "1,0")
    lines = dict(l.split("\t") for l in out.strip().splitlines())
    check("siegel eigen trace", rc == 0 and lines["trace"] == "4,0", f"out={out!r}")
    check("siegel eigen mu_p2", lines["mu_p2"] == "1245184,0", f"out={out!r}")

    # siegel sk stream and compare round trip
    beta = tmp / "beta.tsv"
    beta.write_text("# satake v1 degree=1\n" +
                    "".join(f"{p}\t{v},0\n" for p, v in
                            [(2, 1), (3, -1), (5, 1), (7, 1), (11, -1), (13, 1), (17, -1),
                             (19, 1)]))
    sk = tmp / "sk.tsv"
    rc, _, _ = run("siegel", "sk", "--pmax", "19", "--beta-file", str(beta), "--out", str(sk))
    a2 = sk.read_text().splitlines()[3]
    check("sk a(2)", rc == 0 and a2 == "2\t4.1213203435596428\t0", f"row={a2!r}")

    rc, out, err = run("compare", "--a", str(sk), "--b", str(sk), "--grid", "16,19",
                       "--mode", "ssmo")
    check("compare self is zero", rc == 0 and "19,0,0,0,0,0,0" in out and
          "verdict: consistent-with-equal" in err, f"rc={rc} out={out!r} err={err!r}")

    rc, out2, err2 = run("compare", "--a", str(sk), "--b", str(sk), "--grid", "19,16,16",
                         "--mode", "ssmo")
    check("compare grid normalization and determinism", out2 == out and err2 == err,
          f"out={out2!r}")

    rc, out, err = run("compare", "--a", str(sk), "--b", str(sk), "--grid", "16,19",
                       "--mode", "selberg")
    check("compare selberg", rc == 0 and out.startswith("X,selberg,selberg_over_loglog\n16,0,0")
          and "advisory" in err, f"rc={rc} out={out!r} err={err!r}")

    rc, _, _ = run("compare", "--a", str(sk), "--b", str(sk), "--grid", "1e1,16",
                   "--mode", "ssmo")
    check("grid below 16 is data error", rc == 3, f"rc={rc}")
    rc, _, _ = run("compare", "--a", str(sk), "--b", str(sk), "--grid", "16,x",
                   "--mode", "ssmo")
    check("garbage grid is usage error", rc == 2, f"rc={rc}")

    # eigen compare across weights
    e1 = tmp / "e1.tsv"
    e2 = tmp / "e2.tsv"
    mus = [(2, 2.8), (3, 5.1), (5, 11.0), (7, 18.5), (11, 36.0), (13, 45.0), (17, 70.0),
           (19, 85.0)]
    e1.write_text("# eigen v1 weight=2\n" + "".join(f"{p}\t{v}\t0\n" for p, v in mus))
    e2.write_text("# eigen v1 weight=3\n" + "".join(f"{p}\t{v * p}\t0\n" for p, v in mus))
    rc, out, err = run("compare", "--a", str(e1), "--b", str(e2), "--grid", "16,19",
                       "--mode", "siegel")
    last_s1 = float(out.strip().splitlines()[-1].split(",")[1])
    check("siegel compare cross-weight", rc == 0 and last_s1 < 1e-20 and
          "weights differ" in err and "verdict: consistent-with-equal" in err,
          f"rc={rc} out={out!r} err={err!r}")

    if FAILURES:
        print(f"\n{len(FAILURES)} CLI check(s) failed: {', '.join(FAILURES)}")
        return 1
    print("\nall CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
