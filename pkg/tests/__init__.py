"""Test suite for the narrative trajectory extractor."""
