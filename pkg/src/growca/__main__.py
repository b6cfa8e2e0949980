"""Allow `python -m growca`."""

from .cli import main

raise SystemExit(main())
