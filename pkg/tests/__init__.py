"""Unit and end-to-end tests for the tropfan package."""
