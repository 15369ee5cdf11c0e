# -*- coding: utf-8 -*-
# file: __main__.py
# time: 2026/10/17

import sys

from varkit.cli import main

sys.exit(main())
