#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Sweep Profiling Tool
Measures wall time, RSS growth and peak memory of the verification sweep
for increasing bounds
"""

import os
import gc
import json
import time
import argparse
from pathlib import Path

import psutil
from memory_profiler import memory_usage
from tabulate import tabulate

from metacomm import SweepConfig, VerificationSweep
from prime_classes import conic_index, enumerate_classes


class MemoryProfiler:
    """Records RSS snapshots and per-call time and memory"""

    def __init__(self, output_dir="memory_profiles"):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.process = psutil.Process(os.getpid())
        self.baseline_memory = self.get_memory_usage()
        self.snapshots = []

    def get_memory_usage(self):
        """Current RSS in MB"""
        gc.collect()
        return self.process.memory_info().rss / 1024 / 1024

    def take_snapshot(self, label=""):
        current_memory = self.get_memory_usage()
        snapshot = {
            "timestamp": time.time(),
            "label": label,
            "memory_mb": current_memory,
            "delta_mb": current_memory - self.baseline_memory,
        }
        self.snapshots.append(snapshot)
        return snapshot

    def measure_function(self, func, *args, label="", **kwargs):
        """Run func once, sampling memory_profiler's peak alongside psutil RSS"""
        gc.collect()
        start_memory = self.get_memory_usage()
        self.take_snapshot(f"{label} - Start")

        start_time = time.time()
        peak, result = memory_usage((func, args, kwargs), interval=0.05, max_usage=True, retval=True)
        execution_time = time.time() - start_time

        end_memory = self.get_memory_usage()
        self.take_snapshot(f"{label} - End")

        return {
            "label": label,
            "result": result,
            "execution_time": execution_time,
            "start_memory": start_memory,
            "end_memory": end_memory,
            "peak_memory": float(peak),
            "memory_increase": end_memory - start_memory,
        }

    def save_report(self, rows, name="sweep_profile.json"):
        path = self.output_dir / name
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"runs": rows, "snapshots": self.snapshots}, f, ensure_ascii=False, indent=2)
        return path


def _run_sweep(bound, jobs):
    config = SweepConfig(p_max=bound, q_max=bound, format="json-lines", jobs=jobs, progress=False)
    return VerificationSweep(config).run()


def profile_sweeps(bounds, jobs=1, output_dir="memory_profiles"):
    profiler = MemoryProfiler(output_dir)
    rows = []
    for bound in bounds:
        # cold caches for every bound
        enumerate_classes.cache_clear()
        conic_index.cache_clear()
        m = profiler.measure_function(_run_sweep, bound, jobs, label=f"sweep <= {bound}")
        sweep = m.pop("result")
        rows.append({
            "bound": bound,
            "records": len(sweep.reports),
            "passed": sweep.passed,
            "seconds": round(m["execution_time"], 3),
            "rss_start_mb": round(m["start_memory"], 2),
            "rss_end_mb": round(m["end_memory"], 2),
            "peak_mb": round(m["peak_memory"], 2),
        })
        print(f"✓ bound {bound}: {rows[-1]['records']} records in {rows[-1]['seconds']}s")

    print("\n" + tabulate([list(r.values()) for r in rows], headers=list(rows[0].keys())))
    path = profiler.save_report(rows)
    print(f"\nProfile saved to: {path}")
    return rows


def main():
    parser = argparse.ArgumentParser(description="Profile the verification sweep")
    parser.add_argument("--bounds", type=int, nargs="+", default=[7, 13, 23, 31], help="Sweep bounds (p_max = q_max)")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes")
    parser.add_argument("--output_dir", default="memory_profiles", help="Where to write the JSON report")
    args = parser.parse_args()
    profile_sweeps(args.bounds, jobs=args.jobs, output_dir=args.output_dir)


if __name__ == "__main__":
    main()
