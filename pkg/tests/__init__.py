"""Test suite for the Semantic Classifier"""
