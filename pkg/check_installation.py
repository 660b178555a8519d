#!/usr/bin/env python3
"""
homweyl installation check.
Verifies that the dependencies import, the project files are present and a
small star product evaluates correctly.
"""

import importlib
import sys
from pathlib import Path


def check_import(module_name, package_name=None):
    """Check that a module can be imported"""
    try:
        importlib.import_module(module_name)
        print(f"✅ {package_name or module_name}")
        return True
    except ImportError as e:
        print(f"❌ {package_name or module_name}: {e}")
        return False


def check_file_exists(file_path, description):
    """Check that a file exists"""
    if Path(file_path).exists():
        print(f"✅ {description}")
        return True
    print(f"❌ {description}: File not found")
    return False


def check_smoke():
    """Evaluate x1 ⊛ y1 in A_1^k with k = 1"""
    try:
        from homweyl.parser import format, parse_poly
        from homweyl.twist import TwistVector

        value = format(parse_poly("x1 ⊛ y1", TwistVector.of(1)))
    except Exception as e:
        print(f"❌ star product: {e}")
        return False
    if value != "y1*x1 + x1 + 1":
        print(f"❌ star product: got {value!r}")
        return False
    print(f"✅ x1 ⊛ y1 = {value}")
    return True


def main():
    """Run installation checks"""
    print("homweyl installation check")
    print("=" * 40)

    python_version = sys.version_info
    if python_version >= (3, 8):
        print(f"✅ Python {python_version.major}.{python_version.minor}.{python_version.micro}")
    else:
        print(f"❌ Python version: {python_version.major}.{python_version.minor}.{python_version.micro} (requires 3.8+)")
        return False

    print("\n📦 Dependencies:")
    dependencies = [
        ("fastapi", "FastAPI"),
        ("uvicorn", "Uvicorn"),
        ("sympy", "SymPy"),
        ("pydantic", "Pydantic"),
        ("dotenv", "Python-dotenv"),
        ("pytest", "Pytest"),
        ("pytest_asyncio", "Pytest-asyncio"),
        ("hypothesis", "Hypothesis"),
        ("httpx", "HTTPX"),
    ]
    all_passed = True
    for module, name in dependencies:
        if not check_import(module, name):
            all_passed = False

    print("\n📁 Project structure:")
    files_to_check = [
        ("requirements.txt", "Requirements file"),
        ("homweyl/arith.py", "Weyl algebra arithmetic"),
        ("homweyl/twist.py", "Twisting map"),
        ("homweyl/homstar.py", "Star product"),
        ("homweyl/structure.py", "Structural probes"),
        ("homweyl/morphisms.py", "Morphisms"),
        ("homweyl/deform.py", "Formal deformations"),
        ("homweyl/cli.py", "Command-line front end"),
        ("homweyl/main.py", "FastAPI app"),
        ("schemas/command_record.schema.json", "JSON schema"),
        ("tests/test_arith.py", "Arithmetic tests"),
        ("tests/test_api.py", "API tests"),
    ]
    for file_path, description in files_to_check:
        if not check_file_exists(file_path, description):
            all_passed = False

    print("\n🔧 Smoke test:")
    if not check_smoke():
        all_passed = False

    print("\n" + "=" * 40)
    if all_passed:
        print("🎉 All checks passed! homweyl is ready to run.")
        print("\nNext steps:")
        print("1. Run: python -m homweyl selftest --n 1")
        print("2. Run: python start_server.py")
    else:
        print("❌ Some checks failed. Please install missing dependencies:")
        print("   pip install -r requirements.txt")

    return all_passed


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
