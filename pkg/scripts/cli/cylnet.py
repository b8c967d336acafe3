#!/usr/bin/env python

from cylnet.workflows.cli import main


if __name__ == "__main__":
    main()
