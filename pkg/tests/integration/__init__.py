# Testes de integração