# Export functionality package
