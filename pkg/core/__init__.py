# Stella o Anello - Core modules
