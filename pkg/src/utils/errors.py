"""Hierarquia de exceções da biblioteca.

Cada classe carrega o código de saída usado pela CLI:
0 sucesso, 1 uso/validação, 2 falha numérica ou de execução.
"""
from __future__ import annotations


class KoopmanError(Exception):
    """Erro base de toda a biblioteca."""

    exit_code = 2


class ValidationError(KoopmanError, ValueError):
    """Argumento ou flag inválido."""

    exit_code = 1


class InsufficientDataError(ValidationError):
    """Poucos snapshots para formar pares (M ≥ 1)."""


class UnsupportedMethodError(ValidationError):
    """Operação não definida para o método do modelo."""


class FormatError(ValidationError):
    """Arquivo malformado; `offset` aponta o byte onde a leitura falhou."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class NumericError(KoopmanError):
    """Valores não finitos ou falha de álgebra linear."""


class DegenerateDataError(NumericError):
    """Dados sem variação suficiente (distâncias nulas, Gram nula)."""


class DegenerateKernelError(DegenerateDataError):
    """Todos os autovalores da matriz de kernel abaixo da tolerância."""


class InstabilityError(NumericError):
    """Integração temporal produziu NaN/Inf."""

    def __init__(self, message: str, step: int):
        super().__init__(f"{message} (passo {step})")
        self.step = step


class MemoryBudgetError(KoopmanError):
    """Caso de benchmark excede o orçamento de memória configurado."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate
