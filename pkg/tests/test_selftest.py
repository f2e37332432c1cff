import subprocess
import sys


def test_full_selftest_is_deterministic():
    runs = [subprocess.run([sys.executable, "-m", "fdpairs", "selftest", "--verbose"], capture_output=True)
            for _ in range(2)]
    assert runs[0].returncode == 0, runs[0].stdout.decode()
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stdout.decode().splitlines()[-1] == "10/10 checks passed"
