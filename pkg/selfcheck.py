#!/usr/bin/env python3
"""
Quick self-check for grtab: imports plus a handful of known values.
"""

import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))


def test_imports():
    """Test that all modules can be imported."""
    try:
        from core.config import Config
        from core.tableaux import Tableau
        from core.monomials import DominantMonomial
        from core.symmetric import KazhdanLusztigTable
        from core.plucker import PluckerPolynomial
        from core.characters import ch
        from core.cluster import initial_seed
        from cli.app import run
        print("✓ All modules imported successfully")
        return True
    except ImportError as e:
        print(f"✗ Import error: {e}")
        return False


def test_basic_functionality():
    """Test the tableau/monomial dictionary and the character formula."""
    try:
        from core.characters import ch, qchar_formula
        from core.config import Config
        from core.monomials import DominantMonomial, psi
        from core.tableaux import Tableau, make_tableau

        config = Config()
        print(f"✓ Config created: MAX_K={config.MAX_K}, THREADS={config.THREADS}")

        T = make_tableau([[1, 2], [3, 4], [5, 6]], 3, 6)
        assert str(psi(T)) == "Y[1,-5] Y[1,-3] Y[2,-2] Y[2,0]"
        print("✓ Tableau to monomial working")

        S = Tableau.from_columns([(1, 2, 4), (3, 5, 6)], 3, 6)
        assert str(ch(S, config)) == "P124*P356 - P123*P456"
        print("✓ Character formula working")

        f = qchar_formula(DominantMonomial.parse("Y[2,-4] Y[1,-1]"), config=config)
        assert str(f) == "chi(Y[1,-1])*chi(Y[2,-4]) - chi(Y[3,-3])"
        print("✓ q-character formula working")

        return True

    except Exception as e:
        print(f"✗ Functionality test failed: {e}")
        return False


def test_mutation():
    """Test one seed mutation and its exchange relation."""
    try:
        from core.cluster import exchange_check, initial_seed, mutate_seed

        seed = initial_seed(3, 6)
        assert str(mutate_seed(seed, (1, 0)).labels[(1, 0)]) == "1,3,5"
        assert exchange_check(seed, (1, 0))
        print("✓ Mutation and exchange relation working")
        return True

    except Exception as e:
        print(f"✗ Mutation test failed: {e}")
        return False


def main():
    """Run all checks."""
    print("Checking grtab...")
    print("=" * 40)

    tests = [
        test_imports,
        test_basic_functionality,
        test_mutation,
    ]

    passed = 0
    for test in tests:
        if test():
            passed += 1
        print()

    print(f"Checks passed: {passed}/{len(tests)}")

    if passed == len(tests):
        print("🎉 All checks passed! grtab is ready.")
        print("Run 'python main.py --help' to see the commands.")
        return 0
    print("❌ Some checks failed. Please check the errors above.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
