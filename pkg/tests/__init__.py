# Configuração de testes