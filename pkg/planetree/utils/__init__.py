# Copyright Cade Stocker 2026
