# Normal Form Game Solver Application Package
