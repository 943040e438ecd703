# -*- coding: utf-8 -*-

"""Unit test package for twisted_cohomology."""
