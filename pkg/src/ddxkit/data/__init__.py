"""Bundled data files: term map and paraphrase phrase table."""
