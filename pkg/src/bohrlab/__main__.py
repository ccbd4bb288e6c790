from .start import click_wrapper

click_wrapper()
