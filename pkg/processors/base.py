from abc import ABC, abstractmethod
from typing import Optional

from database import VerificationDatabase


class Processor(ABC):
    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def process(self, database: Optional[VerificationDatabase] = None):
        """
        Run the job; archive what it produced when a database is given.
        """
        pass
