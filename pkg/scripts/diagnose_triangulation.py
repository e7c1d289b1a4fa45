#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Triangulation Diagnostic Script

Walks a triangulation file through the SL2 pipeline and reports where it breaks.
Usage: python scripts/diagnose_triangulation.py <triangulation.json>
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from dotenv import load_dotenv

load_dotenv()

from services import cluster, polygon, stokes2
from services.errors import StokesError


def section(title):
    print("\n" + "="*60)
    print(title)
    print("="*60)


def check_file(filepath):
    section("1. FILE CHECKS")
    if not os.path.exists(filepath):
        print(f"❌ File does not exist: {filepath}")
        return None
    try:
        with open(filepath) as f:
            T = polygon.from_json(f.read())
    except (json.JSONDecodeError, StokesError) as e:
        print(f"❌ Could not read triangulation: {e}")
        return None
    print(f"✓ Triangulation of the {T.N}-gon (K = {T.K})")
    return T


def check_diagonals(T):
    section("2. DIAGONALS")
    for d in T.diagonals:
        label = polygon.label_name(*T.label_of(d))
        print(f"  {d}  carries {label}, tail v{T.tail_of(d)}")
    crossing = [(a, b) for i, a in enumerate(T.diagonals) for b in T.diagonals[i + 1:] if polygon.crosses(a, b)]
    if crossing:
        print(f"❌ Crossing diagonals: {crossing}")
        return False
    print(f"✓ {len(T.diagonals)} non-crossing diagonals, {len(T.triangles())} triangles")
    return True


def check_stokes(T):
    section("3. ORIENTATION SEARCH AND STOKES MATRICES")
    try:
        SD = stokes2.stokes_matrices(T)
    except StokesError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return None
    o = SD.orientation
    print(f"  diagonal tails: {o['diagonal_tails']}")
    print(f"  perimeter signs: {o['perimeter_signs']}")
    print(f"  passing assignments: {o['passing_assignments']}")
    for j, s in enumerate(SD.s, start=1):
        print(f"  s{j} = {s}")
    print(f"  lambda = {SD.lam}")
    if not stokes2.monodromy_check(SD):
        print("❌ S_1 ... S_N Lambda != 1")
        return None
    print("✓ Unitriangular Stokes matrices, product = 1")
    return SD


def check_quiver(T):
    section("4. QUIVER")
    Q = polygon.quiver_of(T)
    for row in Q.matrix():
        print("  " + " ".join(f"{x:3d}" for x in row))
    is_a, orientation = cluster.is_dynkin_a(Q)
    print(f"  A_{len(Q.labels)} path: {is_a} {orientation if is_a else ''}")
    return Q


def check_form(T, Q):
    section("5. LOG-CANONICAL POISSON MATRIX")
    try:
        _, P = stokes2.stokes_form(T)
    except StokesError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return False
    for row in P.log_matrix:
        print("  " + " ".join(f"{str(x):>5}" for x in row))
    if P.log_matrix != stokes2.quarter_adjacency(Q):
        print("❌ P differs from 1/4 Adj(Q)")
        return False
    print("✓ P = 1/4 Adj(Q)")
    return True


def main():
    if len(sys.argv) < 2:
        print("Usage: python scripts/diagnose_triangulation.py <triangulation.json>")
        print("\nCreate one with: python cli.py triangulation export --K 2 --out t.json")
        sys.exit(1)

    filepath = sys.argv[1]

    print("\n" + "#"*60)
    print("TRIANGULATION DIAGNOSTIC REPORT")
    print("#"*60)
    print(f"Analyzing: {filepath}")

    issues = []

    T = check_file(filepath)
    if T is None:
        print("\n❌ Cannot proceed - file missing or malformed")
        sys.exit(1)

    if not check_diagonals(T):
        issues.append("Diagonals cross")
    if check_stokes(T) is None:
        issues.append("Stokes matrices")
    Q = check_quiver(T)
    if not issues and not check_form(T, Q):
        issues.append("Poisson matrix")

    section("SUMMARY")
    if issues:
        print(f"❌ Found {len(issues)} issue(s):")
        for issue in issues:
            print(f"   • {issue}")
    else:
        print("✓ No issues detected")

    print("\n" + "#"*60)
    sys.exit(1 if issues else 0)


if __name__ == "__main__":
    main()
