import sys
import importlib

REQUIRED_LIBRARIES = {
    'numpy': '1.20.0',
    'gmpy2': '2.1.0',
    'pytest': '7.0.0',
}

MIN_PYTHON = (3, 9)


def _version_tuple(version):
    parts = []
    for piece in version.split('.'):
        digits = ''.join(ch for ch in piece if ch.isdigit())
        if not digits:
            break
        parts.append(int(digits))
    return tuple(parts)


def check_version(module_name, min_version):
    try:
        module = importlib.import_module(module_name)
        version = getattr(module, '__version__', None)
        if not version:
            print(f"[WARN] {module_name} has no version information.")
            return False
        if _version_tuple(version) < _version_tuple(min_version):
            print(f"[FAIL] {module_name} version {version} < required {min_version}")
            return False
        print(f"[OK] {module_name} version {version} >= required {min_version}")
        return True
    except ImportError:
        print(f"[FAIL] {module_name} not installed.")
        return False


def check_python_version():
    current = sys.version_info[:2]
    if current < MIN_PYTHON:
        print(f"[FAIL] Python {current[0]}.{current[1]} < required {MIN_PYTHON[0]}.{MIN_PYTHON[1]}")
        return False
    print(f"[OK] Python {current[0]}.{current[1]}")
    return True


def main():
    print("--- Python Version Check ---")
    all_ok = check_python_version()
    print("--- Library Compatibility Check ---")
    for lib, min_ver in REQUIRED_LIBRARIES.items():
        ok = check_version(lib, min_ver)
        all_ok = all_ok and ok
    if all_ok:
        print("\nAll required libraries are compatible and up to date.")
    else:
        print("\nSome libraries are missing or outdated. Please update.")
    return 0 if all_ok else 1


if __name__ == '__main__':
    sys.exit(main())
