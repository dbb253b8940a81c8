#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Metacommutation run script
Runs the unit tests, the acceptance script and the verification sweeps as subprocesses
"""

import sys
import subprocess
import argparse
from pathlib import Path


def run_command(command, description):
    """Run command and display results"""
    print(f"\n{'='*60}")
    print(f"Executing: {description}")
    print(f"{'='*60}")

    try:
        result = subprocess.run(command, shell=True, capture_output=False, text=True)
        if result.returncode == 0:
            print(f"✓ {description} completed")
            return True
        else:
            print(f"❌ {description} failed (exit code {result.returncode})")
            return False
    except Exception as e:
        print(f"❌ Execution error: {e}")
        return False


def main():
    parser = argparse.ArgumentParser(
        description="Metacommutation verification tool",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Usage examples:
  python run.py --test                    # Unit tests and acceptance script
  python run.py --verify                  # Sign / fixed-point sweep up to 31
  python run.py --verify --p-max 47 --q-max 47 --jobs 8
  python run.py --so2                     # SO(g_t) suite
  python run.py --profile                 # Time and memory of growing sweeps
  python run.py --all                     # Everything
        """
    )

    parser.add_argument('--test', action='store_true',
                        help='Run unit tests and test.py')
    parser.add_argument('--verify', action='store_true',
                        help='Run the verification sweep')
    parser.add_argument('--so2', action='store_true',
                        help='Run the SO(g_t) property suite')
    parser.add_argument('--profile', action='store_true',
                        help='Profile sweep time and memory (not part of --all)')
    parser.add_argument('--all', action='store_true',
                        help='Run all of the above')
    parser.add_argument('--p-max', type=int, default=31, help='Sweep bound for p')
    parser.add_argument('--q-max', type=int, default=31, help='Sweep bound for q')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes for the sweep')

    args = parser.parse_args()

    required_files = ['metacomm.py', 'test.py']
    missing_files = [f for f in required_files if not Path(f).exists()]
    if missing_files:
        print("Missing required files:")
        for file in missing_files:
            print(f"  - {file}")
        return 1

    if not any([args.test, args.verify, args.so2, args.profile, args.all]):
        parser.print_help()
        return 0

    print("Metacommutation verification tool")
    print("=" * 60)

    success_count = 0
    total_count = 0
    py = sys.executable

    if args.test or args.all:
        total_count += 2
        if run_command(f"{py} -m unittest discover -p 'test_*.py'", "Unit tests"):
            success_count += 1
        if run_command(f"{py} test.py", "Acceptance checks"):
            success_count += 1

    if args.verify or args.all:
        total_count += 1
        command = (f"{py} metacomm.py verify --p-max {args.p_max} --q-max {args.q_max} "
                   f"--jobs {args.jobs} --format json-lines > verify_p{args.p_max}_q{args.q_max}.jsonl")
        if run_command(command, f"Verification sweep p <= {args.p_max}, q <= {args.q_max}"):
            success_count += 1

    if args.so2 or args.all:
        total_count += 1
        if run_command(f"{py} metacomm.py so2 --p-max {args.p_max}", "SO(g_t) suite"):
            success_count += 1

    if args.profile:
        total_count += 1
        if run_command(f"{py} profile_sweep.py --jobs {args.jobs}", "Sweep profile"):
            success_count += 1

    print(f"\n{'='*60}")
    print("Execution Summary")
    print(f"{'='*60}")
    print(f"Success: {success_count}/{total_count}")

    if success_count == total_count:
        print("🎉 All tasks executed successfully!")
        if args.verify or args.all:
            print(f"\n📊 Sweep records: verify_p{args.p_max}_q{args.q_max}.jsonl")
        return 0
    else:
        print("⚠️  Some tasks failed, please check error messages")
        return 1


if __name__ == "__main__":
    sys.exit(main())
