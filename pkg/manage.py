#!/usr/bin/env python
"""satopo's command-line utility, run against the development settings."""
import os
import sys


def main():
    os.environ.setdefault("SATOPO_SETTINGS_MODULE", "satopo.settings.dev")
    from satopo.cli import main as run

    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
