"""THIS FILE IS AUTO-GENERATED BY SETUP.PY."""

name = "abmod"
version = "0.1.0"
full_version = "0.1.0"
release = True
