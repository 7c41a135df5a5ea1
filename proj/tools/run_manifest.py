#!/usr/bin/env python3
"""Run every suite invocation listed in a manifest file.

Each manifest entry maps 1:1 to `wsa check`.  Reports land next to the
manifest-given prefix as <suite>_<m>_<n>_<l>[_<mutate>].json.  With --shard
i/k only every k-th run (offset i) executes, so CI can split a manifest
across workers.  Exit status: 0 if every run behaved as expected (clean runs
pass; mutation runs fail), nonzero otherwise.
"""
import argparse
import json
import pathlib
import subprocess
import sys


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("manifest", type=pathlib.Path)
    ap.add_argument("--wsa", default="build/tools/wsa", help="path to the wsa binary")
    ap.add_argument("--reports", default="reports", help="report output directory")
    ap.add_argument("--shard", default="0/1", help="i/k: run every k-th entry, offset i")
    args = ap.parse_args()

    shard_i, shard_k = (int(x) for x in args.shard.split("/"))
    runs = json.loads(args.manifest.read_text())["runs"]
    outdir = pathlib.Path(args.reports)
    outdir.mkdir(parents=True, exist_ok=True)

    bad = 0
    for idx, run in enumerate(runs):
        if idx % shard_k != shard_i:
            continue
        name = "_".join(
            str(run[k]) for k in ("suite", "m", "n", "l")
        ) + (("_" + run["mutate"]) if run.get("mutate") else "")
        cmd = [
            args.wsa, "check",
            "--suite", run["suite"],
            "--m", str(run["m"]), "--n", str(run["n"]), "--l", str(run["l"]),
            "--cutoff", str(run.get("cutoff", 1)),
            "--jobs", str(run.get("jobs", 1)),
            "--report", str(outdir / (name + ".json")),
        ]
        if run.get("c_zero"):
            cmd.append("--c-zero")
        if run.get("mutate"):
            cmd += ["--mutate", run["mutate"]]
        rc = subprocess.run(cmd).returncode
        want = 1 if run.get("mutate") else 0
        status = "ok" if rc == want else f"UNEXPECTED exit {rc} (wanted {want})"
        print(f"[{idx}] {name}: {status}")
        if rc != want:
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
