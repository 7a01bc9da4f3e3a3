"""Unit test package for kout_mincut."""
