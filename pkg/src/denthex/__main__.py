"""Allows `python -m denthex`."""

from .cli import main

raise SystemExit(main())
