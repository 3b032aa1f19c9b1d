#!/usr/bin/env python
#-*- coding:utf-8 -*-

import sys

from entringer.cli import dispatch

sys.exit(dispatch(sys.argv[1:]))
