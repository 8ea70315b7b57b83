# Catalog scans, analysis pipeline and corpus verification
