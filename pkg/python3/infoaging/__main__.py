#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

import sys
from .cli import main

sys.exit(main())
