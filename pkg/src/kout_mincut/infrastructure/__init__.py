"""Infrastructure: file formats and reports."""
