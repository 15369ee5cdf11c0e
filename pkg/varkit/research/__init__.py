# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17
