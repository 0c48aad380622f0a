//! Values as printed in the reference tables, frozen for comparison.

/// Fixed-base Λ table: (η label, cells for d - 2k = 1..=30).
pub const FIXBASE: &[(&str, [f64; 30])] = &[
    ("10", [0.584, 0.515, 0.487, 0.473, 0.465, 0.459, 0.456, 0.453, 0.450, 0.448, 0.447, 0.445, 0.444, 0.442, 0.441, 0.440, 0.439, 0.438, 0.437, 0.436, 0.435, 0.434, 0.433, 0.432, 0.431, 0.430, 0.429, 0.428, 0.427, 0.426]),
    ("9", [0.586, 0.519, 0.492, 0.478, 0.471, 0.465, 0.462, 0.459, 0.456, 0.454, 0.453, 0.451, 0.450, 0.448, 0.447, 0.446, 0.445, 0.443, 0.442, 0.441, 0.440, 0.439, 0.438, 0.437, 0.436, 0.435, 0.435, 0.434, 0.433, 0.432]),
    ("8", [0.590, 0.524, 0.498, 0.485, 0.478, 0.472, 0.469, 0.466, 0.463, 0.461, 0.459, 0.458, 0.456, 0.455, 0.454, 0.452, 0.451, 0.450, 0.449, 0.448, 0.447, 0.446, 0.445, 0.444, 0.443, 0.442, 0.441, 0.440, 0.439, 0.438]),
    ("7", [0.594, 0.531, 0.506, 0.493, 0.486, 0.481, 0.477, 0.474, 0.471, 0.469, 0.467, 0.465, 0.464, 0.462, 0.461, 0.460, 0.458, 0.457, 0.456, 0.455, 0.454, 0.453, 0.452, 0.451, 0.450, 0.449, 0.448, 0.447, 0.446, 0.445]),
    ("6", [0.600, 0.539, 0.515, 0.503, 0.495, 0.490, 0.486, 0.483, 0.480, 0.478, 0.476, 0.474, 0.472, 0.471, 0.469, 0.468, 0.467, 0.465, 0.464, 0.463, 0.462, 0.461, 0.460, 0.459, 0.458, 0.457, 0.456, 0.455, 0.454, 0.453]),
    ("5", [0.609, 0.551, 0.528, 0.515, 0.507, 0.502, 0.497, 0.494, 0.491, 0.489, 0.486, 0.484, 0.482, 0.481, 0.479, 0.478, 0.476, 0.475, 0.474, 0.472, 0.471, 0.470, 0.469, 0.468, 0.467, 0.466, 0.465, 0.464, 0.463, 0.462]),
    ("4", [0.622, 0.567, 0.544, 0.531, 0.522, 0.516, 0.512, 0.508, 0.504, 0.502, 0.499, 0.497, 0.495, 0.493, 0.491, 0.489, 0.488, 0.486, 0.485, 0.484, 0.482, 0.481, 0.480, 0.479, 0.478, 0.477, 0.476, 0.475, 0.474, 0.473]),
    ("3", [0.643, 0.589, 0.566, 0.552, 0.543, 0.536, 0.530, 0.526, 0.522, 0.519, 0.516, 0.513, 0.511, 0.508, 0.506, 0.505, 0.503, 0.501, 0.500, 0.498, 0.497, 0.496, 0.494, 0.493, 0.492, 0.491, 0.490, 0.489, 0.488, 0.487]),
    ("2", [0.678, 0.625, 0.600, 0.584, 0.573, 0.564, 0.558, 0.552, 0.547, 0.543, 0.540, 0.537, 0.534, 0.531, 0.529, 0.526, 0.524, 0.522, 0.521, 0.519, 0.517, 0.516, 0.514, 0.513, 0.512, 0.510, 0.509, 0.508, 0.507, 0.506]),
    ("1", [0.754, 0.697, 0.666, 0.646, 0.631, 0.619, 0.610, 0.602, 0.596, 0.590, 0.585, 0.581, 0.577, 0.573, 0.570, 0.567, 0.564, 0.561, 0.559, 0.557, 0.555, 0.553, 0.551, 0.549, 0.547, 0.546, 0.544, 0.543, 0.541, 0.540]),
    ("1/2", [0.841, 0.782, 0.745, 0.720, 0.701, 0.685, 0.673, 0.662, 0.654, 0.646, 0.639, 0.633, 0.628, 0.623, 0.618, 0.614, 0.610, 0.607, 0.604, 0.601, 0.598, 0.595, 0.593, 0.590, 0.588, 0.586, 0.584, 0.582, 0.580, 0.578]),
    ("1/3", [0.891, 0.835, 0.797, 0.769, 0.747, 0.730, 0.716, 0.704, 0.693, 0.684, 0.676, 0.669, 0.663, 0.657, 0.652, 0.647, 0.642, 0.638, 0.634, 0.631, 0.628, 0.624, 0.621, 0.619, 0.616, 0.613, 0.611, 0.609, 0.607, 0.605]),
    ("1/4", [0.924, 0.872, 0.834, 0.805, 0.783, 0.764, 0.749, 0.736, 0.724, 0.714, 0.706, 0.698, 0.691, 0.684, 0.678, 0.673, 0.668, 0.663, 0.659, 0.655, 0.651, 0.648, 0.644, 0.641, 0.638, 0.635, 0.633, 0.630, 0.628, 0.625]),
    ("1/5", [0.946, 0.899, 0.863, 0.834, 0.811, 0.792, 0.776, 0.762, 0.750, 0.739, 0.730, 0.721, 0.714, 0.707, 0.700, 0.695, 0.689, 0.684, 0.679, 0.675, 0.671, 0.667, 0.664, 0.660, 0.657, 0.654, 0.651, 0.648, 0.645, 0.643]),
    ("1/6", [0.961, 0.920, 0.885, 0.858, 0.835, 0.815, 0.799, 0.784, 0.772, 0.761, 0.751, 0.742, 0.734, 0.727, 0.720, 0.714, 0.708, 0.702, 0.697, 0.693, 0.688, 0.684, 0.680, 0.677, 0.673, 0.670, 0.667, 0.664, 0.661, 0.658]),
    ("1/7", [0.972, 0.936, 0.904, 0.877, 0.854, 0.835, 0.818, 0.804, 0.791, 0.779, 0.769, 0.760, 0.752, 0.744, 0.737, 0.730, 0.724, 0.719, 0.713, 0.708, 0.704, 0.699, 0.695, 0.691, 0.688, 0.684, 0.681, 0.678, 0.675, 0.672]),
    ("1/8", [0.979, 0.948, 0.919, 0.893, 0.871, 0.852, 0.835, 0.821, 0.808, 0.796, 0.785, 0.776, 0.767, 0.759, 0.752, 0.745, 0.739, 0.733, 0.728, 0.723, 0.718, 0.713, 0.709, 0.705, 0.701, 0.697, 0.694, 0.691, 0.687, 0.684]),
    ("1/9", [0.985, 0.958, 0.931, 0.907, 0.886, 0.867, 0.850, 0.836, 0.822, 0.811, 0.800, 0.790, 0.782, 0.773, 0.766, 0.759, 0.752, 0.746, 0.741, 0.735, 0.730, 0.726, 0.721, 0.717, 0.713, 0.709, 0.706, 0.702, 0.699, 0.696]),
    ("1/10", [0.989, 0.966, 0.942, 0.919, 0.898, 0.880, 0.863, 0.849, 0.836, 0.824, 0.813, 0.803, 0.794, 0.786, 0.779, 0.771, 0.765, 0.759, 0.753, 0.747, 0.742, 0.737, 0.733, 0.728, 0.724, 0.720, 0.717, 0.713, 0.710, 0.706]),
    ("1/11", [0.992, 0.972, 0.950, 0.929, 0.909, 0.891, 0.875, 0.861, 0.848, 0.836, 0.825, 0.815, 0.806, 0.798, 0.790, 0.783, 0.776, 0.770, 0.764, 0.758, 0.753, 0.748, 0.743, 0.739, 0.735, 0.731, 0.727, 0.723, 0.720, 0.716]),
    ("1/12", [0.994, 0.977, 0.957, 0.937, 0.919, 0.902, 0.886, 0.872, 0.859, 0.847, 0.836, 0.826, 0.817, 0.809, 0.801, 0.794, 0.787, 0.780, 0.774, 0.769, 0.763, 0.758, 0.753, 0.749, 0.744, 0.740, 0.736, 0.733, 0.729, 0.725]),
    ("1/13", [0.995, 0.982, 0.964, 0.945, 0.927, 0.911, 0.895, 0.882, 0.869, 0.857, 0.846, 0.836, 0.827, 0.819, 0.811, 0.803, 0.797, 0.790, 0.784, 0.778, 0.773, 0.768, 0.763, 0.758, 0.754, 0.749, 0.745, 0.741, 0.738, 0.734]),
    ("1/14", [0.997, 0.985, 0.969, 0.952, 0.935, 0.919, 0.904, 0.890, 0.878, 0.866, 0.856, 0.846, 0.837, 0.828, 0.820, 0.813, 0.806, 0.799, 0.793, 0.787, 0.782, 0.776, 0.771, 0.767, 0.762, 0.758, 0.754, 0.750, 0.746, 0.742]),
    ("1/15", [0.997, 0.988, 0.973, 0.957, 0.941, 0.926, 0.912, 0.899, 0.886, 0.875, 0.864, 0.854, 0.845, 0.837, 0.829, 0.821, 0.814, 0.808, 0.801, 0.796, 0.790, 0.785, 0.780, 0.775, 0.770, 0.766, 0.762, 0.758, 0.754, 0.750]),
    ("1/16", [0.998, 0.990, 0.977, 0.962, 0.947, 0.933, 0.919, 0.906, 0.894, 0.883, 0.872, 0.862, 0.853, 0.845, 0.837, 0.829, 0.822, 0.816, 0.809, 0.803, 0.798, 0.792, 0.787, 0.783, 0.778, 0.773, 0.769, 0.765, 0.761, 0.758]),
    ("1/17", [0.999, 0.992, 0.980, 0.967, 0.953, 0.939, 0.925, 0.913, 0.901, 0.890, 0.880, 0.870, 0.861, 0.852, 0.844, 0.837, 0.830, 0.823, 0.817, 0.811, 0.805, 0.800, 0.795, 0.790, 0.785, 0.781, 0.776, 0.772, 0.768, 0.765]),
    ("1/18", [0.999, 0.993, 0.983, 0.970, 0.957, 0.944, 0.931, 0.919, 0.907, 0.897, 0.886, 0.877, 0.868, 0.860, 0.852, 0.844, 0.837, 0.830, 0.824, 0.818, 0.812, 0.807, 0.802, 0.797, 0.792, 0.788, 0.783, 0.779, 0.775, 0.771]),
    ("1/19", [0.999, 0.994, 0.985, 0.974, 0.961, 0.949, 0.937, 0.925, 0.914, 0.903, 0.893, 0.883, 0.875, 0.866, 0.858, 0.851, 0.844, 0.837, 0.831, 0.825, 0.819, 0.814, 0.808, 0.803, 0.799, 0.794, 0.790, 0.786, 0.782, 0.778]),
    ("1/20", [0.999, 0.995, 0.987, 0.977, 0.965, 0.953, 0.941, 0.930, 0.919, 0.909, 0.899, 0.890, 0.881, 0.873, 0.865, 0.857, 0.850, 0.844, 0.837, 0.831, 0.826, 0.820, 0.815, 0.810, 0.805, 0.800, 0.796, 0.792, 0.788, 0.784]),
    ("1/21", [1.000, 0.996, 0.989, 0.979, 0.969, 0.957, 0.946, 0.935, 0.924, 0.914, 0.904, 0.895, 0.887, 0.878, 0.871, 0.863, 0.856, 0.850, 0.843, 0.837, 0.832, 0.826, 0.821, 0.816, 0.811, 0.806, 0.802, 0.798, 0.794, 0.790]),
    ("1/22", [1.000, 0.997, 0.990, 0.982, 0.972, 0.961, 0.950, 0.939, 0.929, 0.919, 0.910, 0.901, 0.892, 0.884, 0.876, 0.869, 0.862, 0.855, 0.849, 0.843, 0.837, 0.832, 0.827, 0.822, 0.817, 0.812, 0.808, 0.804, 0.799, 0.795]),
    ("1/23", [1.000, 0.997, 0.992, 0.984, 0.974, 0.964, 0.954, 0.944, 0.934, 0.924, 0.915, 0.906, 0.897, 0.889, 0.882, 0.874, 0.868, 0.861, 0.855, 0.849, 0.843, 0.837, 0.832, 0.827, 0.822, 0.818, 0.813, 0.809, 0.805, 0.801]),
    ("1/24", [1.000, 0.998, 0.993, 0.986, 0.977, 0.967, 0.957, 0.947, 0.938, 0.928, 0.919, 0.911, 0.902, 0.894, 0.887, 0.880, 0.873, 0.866, 0.860, 0.854, 0.848, 0.843, 0.838, 0.833, 0.828, 0.823, 0.819, 0.814, 0.810, 0.806]),
    ("1/25", [1.000, 0.998, 0.994, 0.987, 0.979, 0.970, 0.960, 0.951, 0.942, 0.932, 0.924, 0.915, 0.907, 0.899, 0.892, 0.885, 0.878, 0.871, 0.865, 0.859, 0.853, 0.848, 0.843, 0.838, 0.833, 0.828, 0.824, 0.819, 0.815, 0.811]),
    ("1/26", [1.000, 0.998, 0.995, 0.989, 0.981, 0.972, 0.963, 0.954, 0.945, 0.936, 0.928, 0.919, 0.911, 0.904, 0.896, 0.889, 0.882, 0.876, 0.870, 0.864, 0.858, 0.853, 0.848, 0.842, 0.838, 0.833, 0.829, 0.824, 0.820, 0.816]),
    ("1/27", [1.000, 0.999, 0.995, 0.990, 0.983, 0.975, 0.966, 0.957, 0.948, 0.940, 0.931, 0.923, 0.915, 0.908, 0.901, 0.894, 0.887, 0.881, 0.874, 0.869, 0.863, 0.857, 0.852, 0.847, 0.842, 0.838, 0.833, 0.829, 0.825, 0.821]),
    ("1/28", [1.000, 0.999, 0.996, 0.991, 0.984, 0.977, 0.969, 0.960, 0.952, 0.943, 0.935, 0.927, 0.919, 0.912, 0.905, 0.898, 0.891, 0.885, 0.879, 0.873, 0.867, 0.862, 0.857, 0.852, 0.847, 0.842, 0.838, 0.833, 0.829, 0.825]),
    ("1/29", [1.000, 0.999, 0.996, 0.992, 0.986, 0.979, 0.971, 0.963, 0.955, 0.946, 0.938, 0.931, 0.923, 0.916, 0.909, 0.902, 0.895, 0.889, 0.883, 0.877, 0.872, 0.866, 0.861, 0.856, 0.851, 0.847, 0.842, 0.838, 0.834, 0.830]),
    ("1/30", [1.000, 0.999, 0.997, 0.993, 0.987, 0.980, 0.973, 0.965, 0.957, 0.949, 0.942, 0.934, 0.927, 0.919, 0.912, 0.906, 0.899, 0.893, 0.887, 0.881, 0.876, 0.870, 0.865, 0.860, 0.855, 0.851, 0.846, 0.842, 0.838, 0.834]),
    ("1/31", [1.000, 0.999, 0.997, 0.994, 0.988, 0.982, 0.975, 0.967, 0.960, 0.952, 0.945, 0.937, 0.930, 0.923, 0.916, 0.909, 0.903, 0.897, 0.891, 0.885, 0.880, 0.874, 0.869, 0.864, 0.860, 0.855, 0.850, 0.846, 0.842, 0.838]),
    ("1/32", [1.000, 1.000, 0.998, 0.994, 0.989, 0.983, 0.977, 0.970, 0.962, 0.955, 0.947, 0.940, 0.933, 0.926, 0.919, 0.913, 0.907, 0.901, 0.895, 0.889, 0.884, 0.878, 0.873, 0.868, 0.863, 0.859, 0.854, 0.850, 0.846, 0.842]),
    ("1/33", [1.000, 1.000, 0.998, 0.995, 0.990, 0.985, 0.978, 0.972, 0.964, 0.957, 0.950, 0.943, 0.936, 0.929, 0.923, 0.916, 0.910, 0.904, 0.898, 0.893, 0.887, 0.882, 0.877, 0.872, 0.867, 0.863, 0.858, 0.854, 0.850, 0.846]),
    ("1/34", [1.000, 1.000, 0.998, 0.995, 0.991, 0.986, 0.980, 0.973, 0.967, 0.960, 0.953, 0.946, 0.939, 0.932, 0.926, 0.920, 0.913, 0.907, 0.902, 0.896, 0.891, 0.885, 0.880, 0.876, 0.871, 0.866, 0.862, 0.858, 0.853, 0.849]),
    ("1/35", [1.000, 1.000, 0.998, 0.996, 0.992, 0.987, 0.981, 0.975, 0.969, 0.962, 0.955, 0.948, 0.942, 0.935, 0.929, 0.923, 0.917, 0.911, 0.905, 0.899, 0.894, 0.889, 0.884, 0.879, 0.874, 0.870, 0.865, 0.861, 0.857, 0.853]),
    ("1/36", [1.000, 1.000, 0.999, 0.996, 0.993, 0.988, 0.983, 0.977, 0.970, 0.964, 0.957, 0.951, 0.944, 0.938, 0.932, 0.926, 0.920, 0.914, 0.908, 0.903, 0.897, 0.892, 0.887, 0.882, 0.878, 0.873, 0.869, 0.865, 0.860, 0.856]),
    ("1/37", [1.000, 1.000, 0.999, 0.997, 0.993, 0.989, 0.984, 0.978, 0.972, 0.966, 0.959, 0.953, 0.947, 0.940, 0.934, 0.928, 0.922, 0.917, 0.911, 0.906, 0.901, 0.895, 0.890, 0.886, 0.881, 0.877, 0.872, 0.868, 0.864, 0.860]),
    ("1/38", [1.000, 1.000, 0.999, 0.997, 0.994, 0.990, 0.985, 0.980, 0.974, 0.968, 0.962, 0.955, 0.949, 0.943, 0.937, 0.931, 0.925, 0.920, 0.914, 0.909, 0.904, 0.899, 0.894, 0.889, 0.884, 0.880, 0.875, 0.871, 0.867, 0.863]),
    ("1/39", [1.000, 1.000, 0.999, 0.997, 0.995, 0.991, 0.986, 0.981, 0.975, 0.969, 0.963, 0.957, 0.951, 0.945, 0.939, 0.934, 0.928, 0.922, 0.917, 0.912, 0.906, 0.901, 0.897, 0.892, 0.887, 0.883, 0.879, 0.874, 0.870, 0.866]),
    ("1/40", [1.000, 1.000, 0.999, 0.998, 0.995, 0.991, 0.987, 0.982, 0.977, 0.971, 0.965, 0.959, 0.953, 0.948, 0.942, 0.936, 0.930, 0.925, 0.920, 0.914, 0.909, 0.904, 0.900, 0.895, 0.890, 0.886, 0.882, 0.877, 0.873, 0.869]),
    ("1/41", [1.000, 1.000, 0.999, 0.998, 0.995, 0.992, 0.988, 0.983, 0.978, 0.973, 0.967, 0.961, 0.955, 0.950, 0.944, 0.938, 0.933, 0.928, 0.922, 0.917, 0.912, 0.907, 0.902, 0.898, 0.893, 0.889, 0.885, 0.880, 0.876, 0.872]),
    ("1/42", [1.000, 1.000, 0.999, 0.998, 0.996, 0.993, 0.989, 0.984, 0.979, 0.974, 0.969, 0.963, 0.957, 0.952, 0.946, 0.941, 0.935, 0.930, 0.925, 0.920, 0.915, 0.910, 0.905, 0.900, 0.896, 0.892, 0.887, 0.883, 0.879, 0.875]),
    ("1/43", [1.000, 1.000, 0.999, 0.998, 0.996, 0.993, 0.990, 0.985, 0.981, 0.975, 0.970, 0.965, 0.959, 0.954, 0.948, 0.943, 0.938, 0.932, 0.927, 0.922, 0.917, 0.912, 0.908, 0.903, 0.899, 0.894, 0.890, 0.886, 0.882, 0.878]),
    ("1/44", [1.000, 1.000, 1.000, 0.998, 0.997, 0.994, 0.990, 0.986, 0.982, 0.977, 0.972, 0.966, 0.961, 0.956, 0.950, 0.945, 0.940, 0.935, 0.930, 0.925, 0.920, 0.915, 0.910, 0.906, 0.901, 0.897, 0.893, 0.889, 0.885, 0.881]),
    ("1/45", [1.000, 1.000, 1.000, 0.999, 0.997, 0.994, 0.991, 0.987, 0.983, 0.978, 0.973, 0.968, 0.963, 0.957, 0.952, 0.947, 0.942, 0.937, 0.932, 0.927, 0.922, 0.917, 0.913, 0.908, 0.904, 0.900, 0.895, 0.891, 0.887, 0.884]),
    ("1/46", [1.000, 1.000, 1.000, 0.999, 0.997, 0.995, 0.992, 0.988, 0.984, 0.979, 0.974, 0.969, 0.964, 0.959, 0.954, 0.949, 0.944, 0.939, 0.934, 0.929, 0.924, 0.920, 0.915, 0.911, 0.906, 0.902, 0.898, 0.894, 0.890, 0.886]),
    ("1/47", [1.000, 1.000, 1.000, 0.999, 0.997, 0.995, 0.992, 0.989, 0.985, 0.980, 0.976, 0.971, 0.966, 0.961, 0.956, 0.951, 0.946, 0.941, 0.936, 0.931, 0.927, 0.922, 0.917, 0.913, 0.909, 0.905, 0.900, 0.896, 0.893, 0.889]),
    ("1/48", [1.000, 1.000, 1.000, 0.999, 0.998, 0.996, 0.993, 0.989, 0.985, 0.981, 0.977, 0.972, 0.967, 0.962, 0.957, 0.953, 0.948, 0.943, 0.938, 0.933, 0.929, 0.924, 0.920, 0.915, 0.911, 0.907, 0.903, 0.899, 0.895, 0.891]),
    ("1/49", [1.000, 1.000, 1.000, 0.999, 0.998, 0.996, 0.993, 0.990, 0.986, 0.982, 0.978, 0.973, 0.969, 0.964, 0.959, 0.954, 0.949, 0.945, 0.940, 0.935, 0.931, 0.926, 0.922, 0.918, 0.913, 0.909, 0.905, 0.901, 0.897, 0.894]),
    ("1/50", [1.000, 1.000, 1.000, 0.999, 0.998, 0.996, 0.994, 0.991, 0.987, 0.983, 0.979, 0.975, 0.970, 0.965, 0.961, 0.956, 0.951, 0.947, 0.942, 0.937, 0.933, 0.928, 0.924, 0.920, 0.916, 0.911, 0.907, 0.904, 0.900, 0.896]),
];

/// d-corrected Λ table: (η label, cells for d - 2k = 1..=30).
pub const THCORRES: &[(&str, [f64; 30])] = &[
    ("1", [0.753, 0.696, 0.665, 0.644, 0.628, 0.617, 0.607, 0.599, 0.592, 0.586, 0.581, 0.577, 0.572, 0.569, 0.565, 0.562, 0.559, 0.556, 0.554, 0.552, 0.549, 0.547, 0.545, 0.543, 0.541, 0.540, 0.538, 0.537, 0.535, 0.534]),
    ("1/2", [0.838, 0.778, 0.741, 0.714, 0.694, 0.678, 0.665, 0.654, 0.645, 0.636, 0.629, 0.623, 0.617, 0.611, 0.606, 0.602, 0.598, 0.594, 0.590, 0.587, 0.584, 0.581, 0.578, 0.575, 0.572, 0.570, 0.568, 0.565, 0.563, 0.561]),
    ("1/3", [0.889, 0.830, 0.790, 0.761, 0.738, 0.720, 0.704, 0.691, 0.680, 0.670, 0.661, 0.654, 0.646, 0.640, 0.634, 0.628, 0.623, 0.619, 0.614, 0.610, 0.606, 0.602, 0.599, 0.596, 0.592, 0.589, 0.586, 0.584, 0.581, 0.579]),
    ("1/4", [0.921, 0.866, 0.827, 0.796, 0.772, 0.752, 0.735, 0.721, 0.708, 0.697, 0.687, 0.678, 0.670, 0.663, 0.656, 0.650, 0.644, 0.638, 0.633, 0.629, 0.624, 0.620, 0.616, 0.612, 0.608, 0.605, 0.602, 0.598, 0.595, 0.592]),
    ("1/5", [0.943, 0.894, 0.855, 0.824, 0.799, 0.778, 0.760, 0.745, 0.732, 0.720, 0.709, 0.699, 0.690, 0.682, 0.675, 0.668, 0.661, 0.655, 0.650, 0.645, 0.640, 0.635, 0.630, 0.626, 0.622, 0.618, 0.614, 0.611, 0.608, 0.604]),
    ("1/6", [0.959, 0.915, 0.878, 0.847, 0.822, 0.801, 0.782, 0.766, 0.752, 0.739, 0.728, 0.717, 0.708, 0.699, 0.691, 0.684, 0.677, 0.670, 0.664, 0.659, 0.653, 0.648, 0.643, 0.639, 0.634, 0.630, 0.626, 0.622, 0.618, 0.615]),
    ("1/7", [0.970, 0.931, 0.896, 0.867, 0.841, 0.820, 0.801, 0.784, 0.770, 0.756, 0.745, 0.734, 0.724, 0.715, 0.706, 0.698, 0.691, 0.684, 0.677, 0.671, 0.666, 0.660, 0.655, 0.650, 0.645, 0.641, 0.636, 0.632, 0.628, 0.624]),
    ("1/8", [0.978, 0.944, 0.911, 0.883, 0.858, 0.836, 0.817, 0.801, 0.785, 0.772, 0.760, 0.748, 0.738, 0.728, 0.719, 0.711, 0.703, 0.696, 0.689, 0.683, 0.677, 0.671, 0.666, 0.660, 0.655, 0.651, 0.646, 0.642, 0.637, 0.633]),
    ("1/9", [0.983, 0.954, 0.924, 0.897, 0.873, 0.851, 0.832, 0.815, 0.800, 0.786, 0.773, 0.762, 0.751, 0.741, 0.732, 0.723, 0.715, 0.708, 0.700, 0.694, 0.687, 0.681, 0.675, 0.670, 0.665, 0.660, 0.655, 0.650, 0.646, 0.641]),
    ("1/10", [0.988, 0.962, 0.935, 0.909, 0.885, 0.864, 0.845, 0.828, 0.813, 0.799, 0.786, 0.774, 0.763, 0.753, 0.743, 0.734, 0.726, 0.718, 0.711, 0.704, 0.697, 0.691, 0.685, 0.679, 0.673, 0.668, 0.663, 0.658, 0.654, 0.649]),
    ("1/11", [0.991, 0.969, 0.944, 0.919, 0.897, 0.876, 0.857, 0.840, 0.824, 0.810, 0.797, 0.785, 0.774, 0.763, 0.754, 0.744, 0.736, 0.728, 0.720, 0.713, 0.706, 0.699, 0.693, 0.687, 0.682, 0.676, 0.671, 0.666, 0.661, 0.656]),
    ("1/12", [0.993, 0.974, 0.952, 0.928, 0.907, 0.886, 0.868, 0.851, 0.835, 0.821, 0.808, 0.795, 0.784, 0.773, 0.763, 0.754, 0.745, 0.737, 0.729, 0.722, 0.715, 0.708, 0.701, 0.695, 0.689, 0.684, 0.678, 0.673, 0.668, 0.663]),
    ("1/13", [0.995, 0.979, 0.958, 0.936, 0.915, 0.896, 0.878, 0.861, 0.845, 0.831, 0.817, 0.805, 0.794, 0.783, 0.773, 0.763, 0.754, 0.746, 0.738, 0.730, 0.723, 0.716, 0.709, 0.703, 0.697, 0.691, 0.685, 0.680, 0.675, 0.670]),
    ("1/14", [0.996, 0.983, 0.964, 0.943, 0.923, 0.904, 0.886, 0.870, 0.854, 0.840, 0.827, 0.814, 0.803, 0.792, 0.781, 0.772, 0.762, 0.754, 0.746, 0.738, 0.730, 0.723, 0.716, 0.710, 0.704, 0.698, 0.692, 0.686, 0.681, 0.676]),
    ("1/15", [0.997, 0.986, 0.969, 0.950, 0.930, 0.912, 0.895, 0.878, 0.863, 0.849, 0.835, 0.823, 0.811, 0.800, 0.789, 0.780, 0.770, 0.762, 0.753, 0.745, 0.738, 0.730, 0.723, 0.717, 0.710, 0.704, 0.698, 0.692, 0.687, 0.682]),
    ("1/16", [0.998, 0.988, 0.973, 0.955, 0.937, 0.919, 0.902, 0.886, 0.871, 0.856, 0.843, 0.831, 0.819, 0.808, 0.797, 0.787, 0.778, 0.769, 0.760, 0.752, 0.744, 0.737, 0.730, 0.723, 0.717, 0.710, 0.704, 0.698, 0.693, 0.687]),
    ("1/17", [0.998, 0.990, 0.976, 0.960, 0.943, 0.925, 0.909, 0.893, 0.878, 0.864, 0.851, 0.838, 0.826, 0.815, 0.804, 0.794, 0.785, 0.776, 0.767, 0.759, 0.751, 0.744, 0.736, 0.729, 0.723, 0.716, 0.710, 0.704, 0.698, 0.693]),
    ("1/18", [0.999, 0.992, 0.979, 0.964, 0.948, 0.931, 0.915, 0.900, 0.885, 0.871, 0.858, 0.845, 0.833, 0.822, 0.811, 0.801, 0.792, 0.783, 0.774, 0.765, 0.757, 0.750, 0.742, 0.735, 0.729, 0.722, 0.716, 0.710, 0.704, 0.698]),
    ("1/19", [0.999, 0.993, 0.982, 0.968, 0.952, 0.937, 0.921, 0.906, 0.891, 0.877, 0.864, 0.852, 0.840, 0.829, 0.818, 0.808, 0.798, 0.789, 0.780, 0.772, 0.764, 0.756, 0.748, 0.741, 0.734, 0.728, 0.721, 0.715, 0.709, 0.703]),
    ("1/20", [0.999, 0.994, 0.984, 0.971, 0.957, 0.941, 0.926, 0.911, 0.897, 0.884, 0.870, 0.858, 0.846, 0.835, 0.824, 0.814, 0.804, 0.795, 0.786, 0.778, 0.769, 0.761, 0.754, 0.747, 0.740, 0.733, 0.726, 0.720, 0.714, 0.708]),
    ("1/21", [0.999, 0.995, 0.986, 0.974, 0.960, 0.946, 0.931, 0.917, 0.903, 0.889, 0.876, 0.864, 0.852, 0.841, 0.830, 0.820, 0.810, 0.801, 0.792, 0.783, 0.775, 0.767, 0.759, 0.752, 0.745, 0.738, 0.731, 0.725, 0.719, 0.713]),
    ("1/22", [1.000, 0.996, 0.988, 0.977, 0.964, 0.950, 0.936, 0.922, 0.908, 0.895, 0.882, 0.870, 0.858, 0.847, 0.836, 0.826, 0.816, 0.806, 0.797, 0.789, 0.780, 0.772, 0.765, 0.757, 0.750, 0.743, 0.736, 0.730, 0.723, 0.717]),
    ("1/23", [1.000, 0.997, 0.990, 0.979, 0.967, 0.954, 0.940, 0.926, 0.913, 0.900, 0.887, 0.875, 0.863, 0.852, 0.841, 0.831, 0.821, 0.812, 0.803, 0.794, 0.786, 0.777, 0.770, 0.762, 0.755, 0.748, 0.741, 0.734, 0.728, 0.722]),
    ("1/24", [1.000, 0.997, 0.991, 0.981, 0.970, 0.957, 0.944, 0.931, 0.917, 0.905, 0.892, 0.880, 0.869, 0.857, 0.847, 0.836, 0.826, 0.817, 0.808, 0.799, 0.791, 0.782, 0.774, 0.767, 0.759, 0.752, 0.745, 0.739, 0.732, 0.726]),
    ("1/25", [1.000, 0.998, 0.992, 0.983, 0.972, 0.960, 0.948, 0.935, 0.922, 0.909, 0.897, 0.885, 0.873, 0.862, 0.852, 0.841, 0.831, 0.822, 0.813, 0.804, 0.795, 0.787, 0.779, 0.772, 0.764, 0.757, 0.750, 0.743, 0.737, 0.730]),
    ("1/26", [1.000, 0.998, 0.993, 0.985, 0.975, 0.963, 0.951, 0.938, 0.926, 0.913, 0.901, 0.890, 0.878, 0.867, 0.856, 0.846, 0.836, 0.827, 0.818, 0.809, 0.800, 0.792, 0.784, 0.776, 0.769, 0.761, 0.754, 0.747, 0.741, 0.734]),
    ("1/27", [1.000, 0.998, 0.994, 0.986, 0.977, 0.966, 0.954, 0.942, 0.930, 0.918, 0.906, 0.894, 0.883, 0.872, 0.861, 0.851, 0.841, 0.831, 0.822, 0.813, 0.805, 0.796, 0.788, 0.780, 0.773, 0.765, 0.758, 0.751, 0.745, 0.738]),
    ("1/28", [1.000, 0.999, 0.995, 0.988, 0.979, 0.968, 0.957, 0.945, 0.933, 0.921, 0.910, 0.898, 0.887, 0.876, 0.865, 0.855, 0.845, 0.836, 0.827, 0.818, 0.809, 0.801, 0.792, 0.785, 0.777, 0.770, 0.762, 0.755, 0.749, 0.742]),
    ("1/29", [1.000, 0.999, 0.995, 0.989, 0.981, 0.971, 0.960, 0.948, 0.937, 0.925, 0.913, 0.902, 0.891, 0.880, 0.870, 0.860, 0.850, 0.840, 0.831, 0.822, 0.813, 0.805, 0.797, 0.789, 0.781, 0.774, 0.766, 0.759, 0.753, 0.746]),
    ("1/30", [1.000, 0.999, 0.996, 0.990, 0.982, 0.973, 0.962, 0.951, 0.940, 0.929, 0.917, 0.906, 0.895, 0.884, 0.874, 0.864, 0.854, 0.844, 0.835, 0.826, 0.817, 0.809, 0.801, 0.793, 0.785, 0.778, 0.770, 0.763, 0.756, 0.750]),
    ("1/31", [1.000, 0.999, 0.996, 0.991, 0.984, 0.975, 0.965, 0.954, 0.943, 0.932, 0.921, 0.910, 0.899, 0.888, 0.878, 0.868, 0.858, 0.848, 0.839, 0.830, 0.821, 0.813, 0.805, 0.797, 0.789, 0.781, 0.774, 0.767, 0.760, 0.753]),
    ("1/32", [1.000, 0.999, 0.997, 0.992, 0.985, 0.977, 0.967, 0.957, 0.946, 0.935, 0.924, 0.913, 0.902, 0.892, 0.882, 0.871, 0.862, 0.852, 0.843, 0.834, 0.825, 0.817, 0.808, 0.800, 0.793, 0.785, 0.778, 0.770, 0.763, 0.757]),
    ("1/33", [1.000, 0.999, 0.997, 0.993, 0.986, 0.978, 0.969, 0.959, 0.949, 0.938, 0.927, 0.916, 0.906, 0.895, 0.885, 0.875, 0.865, 0.856, 0.847, 0.838, 0.829, 0.820, 0.812, 0.804, 0.796, 0.789, 0.781, 0.774, 0.767, 0.760]),
    ("1/34", [1.000, 1.000, 0.998, 0.993, 0.987, 0.980, 0.971, 0.961, 0.951, 0.941, 0.930, 0.920, 0.909, 0.899, 0.889, 0.879, 0.869, 0.860, 0.850, 0.841, 0.833, 0.824, 0.816, 0.808, 0.800, 0.792, 0.785, 0.777, 0.770, 0.763]),
    ("1/35", [1.000, 1.000, 0.998, 0.994, 0.988, 0.981, 0.973, 0.963, 0.954, 0.943, 0.933, 0.923, 0.912, 0.902, 0.892, 0.882, 0.873, 0.863, 0.854, 0.845, 0.836, 0.828, 0.819, 0.811, 0.803, 0.796, 0.788, 0.781, 0.774, 0.767]),
    ("1/36", [1.000, 1.000, 0.998, 0.995, 0.989, 0.982, 0.974, 0.965, 0.956, 0.946, 0.936, 0.926, 0.915, 0.905, 0.895, 0.885, 0.876, 0.866, 0.857, 0.848, 0.840, 0.831, 0.823, 0.815, 0.807, 0.799, 0.791, 0.784, 0.777, 0.770]),
    ("1/37", [1.000, 1.000, 0.998, 0.995, 0.990, 0.984, 0.976, 0.967, 0.958, 0.948, 0.938, 0.928, 0.918, 0.908, 0.898, 0.889, 0.879, 0.870, 0.861, 0.852, 0.843, 0.834, 0.826, 0.818, 0.810, 0.802, 0.795, 0.787, 0.780, 0.773]),
    ("1/38", [1.000, 1.000, 0.999, 0.996, 0.991, 0.985, 0.977, 0.969, 0.960, 0.951, 0.941, 0.931, 0.921, 0.911, 0.901, 0.892, 0.882, 0.873, 0.864, 0.855, 0.846, 0.838, 0.829, 0.821, 0.813, 0.805, 0.798, 0.790, 0.783, 0.776]),
    ("1/39", [1.000, 1.000, 0.999, 0.996, 0.992, 0.986, 0.979, 0.971, 0.962, 0.953, 0.943, 0.934, 0.924, 0.914, 0.904, 0.895, 0.885, 0.876, 0.867, 0.858, 0.849, 0.841, 0.832, 0.824, 0.816, 0.809, 0.801, 0.793, 0.786, 0.779]),
    ("1/40", [1.000, 1.000, 0.999, 0.996, 0.992, 0.987, 0.980, 0.972, 0.964, 0.955, 0.946, 0.936, 0.926, 0.917, 0.907, 0.898, 0.888, 0.879, 0.870, 0.861, 0.852, 0.844, 0.836, 0.827, 0.819, 0.812, 0.804, 0.796, 0.789, 0.782]),
    ("1/41", [1.000, 1.000, 0.999, 0.997, 0.993, 0.988, 0.981, 0.974, 0.966, 0.957, 0.948, 0.938, 0.929, 0.919, 0.910, 0.901, 0.891, 0.882, 0.873, 0.864, 0.855, 0.847, 0.839, 0.830, 0.822, 0.815, 0.807, 0.799, 0.792, 0.785]),
    ("1/42", [1.000, 1.000, 0.999, 0.997, 0.994, 0.989, 0.982, 0.975, 0.967, 0.959, 0.950, 0.941, 0.931, 0.922, 0.913, 0.903, 0.894, 0.885, 0.876, 0.867, 0.858, 0.850, 0.842, 0.833, 0.825, 0.817, 0.810, 0.802, 0.795, 0.788]),
    ("1/43", [1.000, 1.000, 0.999, 0.997, 0.994, 0.989, 0.983, 0.977, 0.969, 0.961, 0.952, 0.943, 0.934, 0.924, 0.915, 0.906, 0.897, 0.888, 0.879, 0.870, 0.861, 0.853, 0.844, 0.836, 0.828, 0.820, 0.813, 0.805, 0.798, 0.790]),
    ("1/44", [1.000, 1.000, 0.999, 0.998, 0.995, 0.990, 0.984, 0.978, 0.970, 0.962, 0.954, 0.945, 0.936, 0.927, 0.918, 0.908, 0.899, 0.890, 0.881, 0.873, 0.864, 0.856, 0.847, 0.839, 0.831, 0.823, 0.815, 0.808, 0.800, 0.793]),
    ("1/45", [1.000, 1.000, 0.999, 0.998, 0.995, 0.991, 0.985, 0.979, 0.972, 0.964, 0.956, 0.947, 0.938, 0.929, 0.920, 0.911, 0.902, 0.893, 0.884, 0.875, 0.867, 0.858, 0.850, 0.842, 0.834, 0.826, 0.818, 0.810, 0.803, 0.796]),
    ("1/46", [1.000, 1.000, 0.999, 0.998, 0.995, 0.991, 0.986, 0.980, 0.973, 0.965, 0.957, 0.949, 0.940, 0.931, 0.922, 0.913, 0.904, 0.895, 0.887, 0.878, 0.869, 0.861, 0.853, 0.844, 0.836, 0.828, 0.821, 0.813, 0.806, 0.798]),
    ("1/47", [1.000, 1.000, 1.000, 0.998, 0.996, 0.992, 0.987, 0.981, 0.974, 0.967, 0.959, 0.951, 0.942, 0.933, 0.924, 0.916, 0.907, 0.898, 0.889, 0.881, 0.872, 0.864, 0.855, 0.847, 0.839, 0.831, 0.823, 0.816, 0.808, 0.801]),
    ("1/48", [1.000, 1.000, 1.000, 0.998, 0.996, 0.993, 0.988, 0.982, 0.976, 0.968, 0.961, 0.952, 0.944, 0.935, 0.927, 0.918, 0.909, 0.900, 0.892, 0.883, 0.874, 0.866, 0.858, 0.850, 0.842, 0.834, 0.826, 0.818, 0.811, 0.803]),
    ("1/49", [1.000, 1.000, 1.000, 0.999, 0.996, 0.993, 0.989, 0.983, 0.977, 0.970, 0.962, 0.954, 0.946, 0.937, 0.929, 0.920, 0.911, 0.903, 0.894, 0.885, 0.877, 0.869, 0.860, 0.852, 0.844, 0.836, 0.828, 0.821, 0.813, 0.806]),
    ("1/50", [1.000, 1.000, 1.000, 0.999, 0.997, 0.994, 0.989, 0.984, 0.978, 0.971, 0.964, 0.956, 0.948, 0.939, 0.931, 0.922, 0.914, 0.905, 0.896, 0.888, 0.879, 0.871, 0.863, 0.855, 0.847, 0.839, 0.831, 0.823, 0.816, 0.808]),
];

/// (AE, RE) per η in {0.5, 1, 2, 4, 8}.
pub type SigmaCells = [(f64, f64); 5];

/// σ_s approximation errors: (d, σ, [(AE, RE) for η = 0.5, 1, 2, 4, 8]).
pub const SIGMA_ERRORS: &[(u64, f64, SigmaCells)] = &[
    (3072, 0.12, [(2.15e-11, 4.88e-04), (1.76e-07, 1.63e-04), (9.88e-14, 8.23e-13), (8.65e-05, 8.14e-05), (3.54e-04, 1.22e-04)]),
    (3072, 0.25, [(4.48e-11, 4.88e-04), (3.67e-07, 1.63e-04), (2.06e-13, 8.23e-13), (1.80e-04, 8.14e-05), (7.37e-04, 1.22e-04)]),
    (3072, 0.50, [(8.96e-11, 4.88e-04), (7.34e-07, 1.63e-04), (4.12e-13, 8.23e-13), (3.60e-04, 8.14e-05), (1.47e-03, 1.22e-04)]),
    (3072, 1.00, [(1.79e-10, 4.88e-04), (1.47e-06, 1.63e-04), (8.23e-13, 8.23e-13), (7.21e-04, 8.14e-05), (2.95e-03, 1.22e-04)]),
    (150224, 0.12, [(1.29e-15, 9.99e-06), (5.15e-10, 3.33e-06), (4.46e-12, 3.72e-11), (4.68e-06, 1.66e-06), (3.11e-05, 2.50e-06)]),
    (150224, 0.25, [(2.68e-15, 9.99e-06), (1.07e-09, 3.33e-06), (9.30e-12, 3.72e-11), (9.74e-06, 1.66e-06), (6.48e-05, 2.50e-06)]),
    (150224, 0.50, [(5.36e-15, 9.99e-06), (2.15e-09, 3.33e-06), (1.86e-11, 3.72e-11), (1.95e-05, 1.66e-06), (1.30e-04, 2.50e-06)]),
    (150224, 1.00, [(1.07e-14, 9.99e-06), (4.29e-09, 3.33e-06), (3.72e-11, 3.72e-11), (3.90e-05, 1.66e-06), (2.59e-04, 2.50e-06)]),
];

/// Ψ vs Φ maximum errors: (d, AE, RE).
pub const PSI_PHI: &[(u64, f64, f64)] = &[
    (10, 1.46e-2, 1.93e-2),
    (100, 1.38e-3, 1.83e-3),
    (1000, 1.38e-4, 1.82e-4),
    (10000, 1.38e-5, 1.82e-5),
    (100000, 1.38e-6, 1.82e-6),
    (1000000, 1.38e-7, 1.82e-7),
];

/// EGG simulation grid (d = 10^5, σ = 1, k = d/2 - 5, C = 2): one row per η,
/// columns in the order of `smoothcert::studies::SIMULATION_CELLS`.
pub const SIMULATION: &[(f64, [f64; 11])] = &[
    (0.5, [0.188, 0.194, 0.216, 0.273, 0.408, 0.391, 0.407, 0.471, 0.678, 0.632, 0.675]),
    (1.0, [0.218, 0.225, 0.251, 0.320, 0.471, 0.451, 0.470, 0.546, 0.778, 0.726, 0.776]),
    (2.0, [0.234, 0.242, 0.271, 0.346, 0.506, 0.485, 0.505, 0.589, 0.836, 0.779, 0.833]),
    (4.0, [0.243, 0.251, 0.281, 0.360, 0.525, 0.502, 0.524, 0.611, 0.867, 0.807, 0.863]),
    (8.0, [0.247, 0.255, 0.286, 0.367, 0.534, 0.511, 0.533, 0.622, 0.882, 0.821, 0.878]),
    (16.0, [0.249, 0.257, 0.288, 0.370, 0.538, 0.515, 0.537, 0.627, 0.889, 0.827, 0.885]),
    (32.0, [0.250, 0.258, 0.289, 0.371, 0.540, 0.517, 0.539, 0.629, 0.893, 0.830, 0.887]),
    (64.0, [0.250, 0.258, 0.290, 0.371, 0.541, 0.518, 0.539, 0.629, 0.894, 0.831, 0.888]),
];

/// Printed η = 64 vs η = 2 radius increase (percent) per simulation column.
pub const SIMULATION_INCREASE: [f64; 11] = [6.8, 6.6, 7.0, 7.2, 6.9, 6.8, 6.7, 6.8, 6.9, 6.7, 6.6];
