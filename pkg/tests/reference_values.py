"""Published third-moment values along lines gamma1 + gamma2 = alpha.

Rounded to three decimals; gamma1 runs over ten equally spaced points
from alpha/2 to -0.505.
"""

PUBLISHED_M3 = {
    -1.4: (1.183, 1.189, 1.206, 1.236, 1.281, 1.340, 1.413, 1.486, 1.488, 0.947),
    -1.3: (2.067, 2.071, 2.082, 2.101, 2.125, 2.149, 2.162, 2.135, 1.972, 1.239),
    -1.2: (2.548, 2.549, 2.554, 2.559, 2.564, 2.561, 2.538, 2.465, 2.258, 1.587),
    -1.1: (2.770, 2.770, 2.770, 2.770, 2.766, 2.755, 2.726, 2.659, 2.505, 2.113),
}

PUBLISHED_GAMMA1 = {
    -1.4: (-0.700, -0.678, -0.657, -0.635, -0.613, -0.592, -0.570, -0.548, -0.527, -0.505),
    -1.3: (-0.650, -0.634, -0.618, -0.602, -0.586, -0.569, -0.553, -0.537, -0.521, -0.505),
    -1.2: (-0.600, -0.589, -0.579, -0.568, -0.558, -0.547, -0.537, -0.526, -0.516, -0.505),
    -1.1: (-0.550, -0.545, -0.540, -0.535, -0.530, -0.525, -0.520, -0.515, -0.510, -0.505),
}
