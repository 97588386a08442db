# Testes unitários