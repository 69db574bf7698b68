// Captured service response bodies for dashboard tests.
// Generated against a live service seeded with three benchmark
// sessions (fix-a empty profile, fix-b frustum+lod, fix-c four
// techniques) and one launched-run session (gui-run). Keys are the
// exact path+query the client requests.

export const FIXTURES: Record<string, string> = {
  "/catalog": "{\n \"families\": [\n  {\n   \"id\": \"rendering\",\n   \"display_name\": \"Rendering\",\n   \"color\": [\n    0.996,\n    0.851,\n    0.412\n   ],\n   \"technique_count\": 5\n  },\n  {\n   \"id\": \"shadow\",\n   \"display_name\": \"Shadow\",\n   \"color\": [\n    0.431,\n    0.906,\n    0.824\n   ],\n   \"technique_count\": 2\n  },\n  {\n   \"id\": \"data\",\n   \"display_name\": \"Data\",\n   \"color\": [\n    0.706,\n    0.949,\n    0.733\n   ],\n   \"technique_count\": 2\n  },\n  {\n   \"id\": \"geometry\",\n   \"display_name\": \"Geometry\",\n   \"color\": [\n    0.839,\n    0.71,\n    1.0\n   ],\n   \"technique_count\": 6\n  },\n  {\n   \"id\": \"cpu\",\n   \"display_name\": \"CPU\",\n   \"color\": [\n    0.984,\n    0.78,\n    0.714\n   ],\n   \"technique_count\": 2\n  },\n  {\n   \"id\": \"engine\",\n   \"display_name\": \"Engine\",\n   \"color\": [\n    0.929,\n    0.929,\n    0.929\n   ],\n   \"technique_count\": 5\n  }\n ],\n \"techniques\": [\n  {\n   \"id\": \"ray_tracing\",\n   \"family\": \"rendering\",\n   \"display_name\": \"Ray Tracing\",\n   \"description\": \"Physically based light transport; highest image quality at a steep per-frame GPU cost.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": -2,\n    \"frame_time_ms\": -2,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": -1,\n    \"gpu_frame_time_ms\": -2\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"volumetric_ray_marching\",\n   \"family\": \"rendering\",\n   \"display_name\": \"Volumetric Ray Marching\",\n   \"description\": \"Steps rays through participating media to shade volumes without explicit surface geometry.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": -1,\n    \"frame_time_ms\": -1,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": -1,\n    \"gpu_frame_time_ms\": -2\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"gpu_raycasting\",\n   \"family\": \"rendering\",\n   \"display_name\": \"GPU Raycasting\",\n   \"description\": \"Casts primary rays in fragment/compute shaders, skipping mesh tessellation of implicit shapes.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": -1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"hyperballs_shaders\",\n   \"family\": \"rendering\",\n   \"display_name\": \"HyperBalls Shaders\",\n   \"description\": \"Analytic sphere/bond surfaces evaluated in shaders instead of dense triangle meshes.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 1,\n    \"gpu_frame_time_ms\": 0\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"gpu_instancing\",\n   \"family\": \"rendering\",\n   \"display_name\": \"GPU Instancing\",\n   \"description\": \"Issues one draw for many identical meshes so the GPU iterates instances internally.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 1,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"ssao\",\n   \"family\": \"shadow\",\n   \"display_name\": \"Screen Space Ambient Occlusion\",\n   \"description\": \"Approximates contact shadows from the depth buffer to add depth cues at moderate cost.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": -1,\n    \"frame_time_ms\": -1,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": -1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"virtual_shadow_maps\",\n   \"family\": \"shadow\",\n   \"display_name\": \"Virtual Shadow Maps\",\n   \"description\": \"Sparse, paged high-resolution shadow maps that only allocate detail where the camera looks.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 0,\n    \"frame_time_ms\": 0,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": -1,\n    \"gpu_frame_time_ms\": -1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"data_compression\",\n   \"family\": \"data\",\n   \"display_name\": \"Data Compression\",\n   \"description\": \"Stores datasets in compact encodings, trading decode CPU for a smaller memory footprint.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 0,\n    \"frame_time_ms\": 0,\n    \"cpu_load_pct\": -1,\n    \"ram_mb\": 2,\n    \"gpu_frame_time_ms\": 0\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"instancing\",\n   \"family\": \"data\",\n   \"display_name\": \"Instancing\",\n   \"description\": \"Collapses repeated (kind, detail level) draw submissions into one batch per group.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 2,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"hlod\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Hierarchical LOD\",\n   \"description\": \"Merges clusters of distant objects into single proxy meshes swapped in as a group.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"lod\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Level of Detail\",\n   \"description\": \"Selects coarser primitive counts as camera distance crosses ascending thresholds.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 2\n   },\n   \"parameters\": [\n    {\n     \"name\": \"lod_thresholds\",\n     \"type\": \"floats\",\n     \"default\": [\n      50.0,\n      150.0,\n      400.0\n     ]\n    }\n   ]\n  },\n  {\n   \"id\": \"distance_culling\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Distance Culling\",\n   \"description\": \"Skips objects farther than a per-object or profile-wide maximum draw distance.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 2\n   },\n   \"parameters\": [\n    {\n     \"name\": \"max_draw_distance\",\n     \"type\": \"float\",\n     \"default\": 500.0\n    }\n   ]\n  },\n  {\n   \"id\": \"whisker\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Whisker Deprioritization\",\n   \"description\": \"Forces a chosen span of the dataset's principal axis to the coarsest detail level, drawn black.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": [\n    {\n     \"name\": \"lo\",\n     \"type\": \"unit\",\n     \"default\": 0.6\n    },\n    {\n     \"name\": \"hi\",\n     \"type\": \"unit\",\n     \"default\": 0.8\n    }\n   ]\n  },\n  {\n   \"id\": \"empty_space_skipping\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Empty Space Skipping\",\n   \"description\": \"Skips cells of a field that carry no signal so sampling concentrates where data lives.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"marching_cubes\",\n   \"family\": \"geometry\",\n   \"display_name\": \"Marching Cubes\",\n   \"description\": \"Extracts isosurface meshes from scalar fields once, replacing repeated per-frame volume walks.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 0,\n    \"frame_time_ms\": 0,\n    \"cpu_load_pct\": -1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"cpu_parallel\",\n   \"family\": \"cpu\",\n   \"display_name\": \"CPU Parallelism\",\n   \"description\": \"Spreads simulation and preparation work across worker threads to unblock the render loop.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 2,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 0\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"ml_driven\",\n   \"family\": \"cpu\",\n   \"display_name\": \"ML-Driven Scheduling\",\n   \"description\": \"Learns per-scene heuristics (what to cull, when to stream) from recorded telemetry.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 0\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"nanite\",\n   \"family\": \"engine\",\n   \"display_name\": \"Virtualized Geometry\",\n   \"description\": \"Streams and rasterizes micro-detail geometry clusters sized to the pixels they cover.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": -1,\n    \"gpu_frame_time_ms\": 2\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"lumen\",\n   \"family\": \"engine\",\n   \"display_name\": \"Dynamic Global Illumination\",\n   \"description\": \"Real-time indirect lighting; large GPU cost, included for completeness of the menu.\",\n   \"implemented\": false,\n   \"radar\": {\n    \"fps\": -2,\n    \"frame_time_ms\": -2,\n    \"cpu_load_pct\": 0,\n    \"ram_mb\": -1,\n    \"gpu_frame_time_ms\": -2\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"level_streaming\",\n   \"family\": \"engine\",\n   \"display_name\": \"Level Streaming\",\n   \"description\": \"Loads only spatial cells within a Chebyshev radius of the camera cell; the rest stay unloaded.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 1,\n    \"frame_time_ms\": 1,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 2,\n    \"gpu_frame_time_ms\": 1\n   },\n   \"parameters\": [\n    {\n     \"name\": \"streaming_radius\",\n     \"type\": \"int\",\n     \"default\": 2\n    }\n   ]\n  },\n  {\n   \"id\": \"frustum_culling\",\n   \"family\": \"engine\",\n   \"display_name\": \"Frustum Culling\",\n   \"description\": \"Drops objects whose bounding spheres fall fully outside any of the six camera frustum planes.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": 1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 2\n   },\n   \"parameters\": []\n  },\n  {\n   \"id\": \"occlusion_culling\",\n   \"family\": \"engine\",\n   \"display_name\": \"Occlusion Culling\",\n   \"description\": \"Hides objects provably behind nearer geometry using a conservative low-resolution depth pyramid.\",\n   \"implemented\": true,\n   \"radar\": {\n    \"fps\": 2,\n    \"frame_time_ms\": 2,\n    \"cpu_load_pct\": -1,\n    \"ram_mb\": 0,\n    \"gpu_frame_time_ms\": 2\n   },\n   \"parameters\": [\n    {\n     \"name\": \"occlusion_resolution\",\n     \"type\": \"pow2\",\n     \"default\": 64\n    },\n    {\n     \"name\": \"occluder_count\",\n     \"type\": \"int\",\n     \"default\": 64\n    }\n   ]\n  }\n ]\n}\n",
  "/datasets": "{\n \"datasets\": [\n  {\n   \"id\": \"synthetic:10000\",\n   \"kind\": \"synthetic\",\n   \"description\": \"procedural assembly, 10k objects, seed 0\"\n  },\n  {\n   \"id\": \"synthetic:500000\",\n   \"kind\": \"synthetic\",\n   \"description\": \"procedural assembly at full production scale\"\n  }\n ]\n}\n",
  "/sessions": "{\n \"sessions\": [\n  {\n   \"name\": \"fix-a\",\n   \"description\": \"fixture fix-a\",\n   \"dataset\": \"synthetic:2000:7\",\n   \"template\": \"T1\",\n   \"optimizations\": [],\n   \"started_at\": \"2026-08-19T10:35:10.114389+00:00\",\n   \"sample_count\": 60,\n   \"duration\": 29.5\n  },\n  {\n   \"name\": \"fix-b\",\n   \"description\": \"fixture fix-b\",\n   \"dataset\": \"synthetic:2000:7\",\n   \"template\": \"T1\",\n   \"optimizations\": [\n    \"frustum_culling\",\n    \"lod\"\n   ],\n   \"started_at\": \"2026-08-19T10:35:10.121167+00:00\",\n   \"sample_count\": 60,\n   \"duration\": 29.5\n  },\n  {\n   \"name\": \"fix-c\",\n   \"description\": \"fixture fix-c\",\n   \"dataset\": \"synthetic:2000:7\",\n   \"template\": \"T1\",\n   \"optimizations\": [\n    \"distance_culling\",\n    \"frustum_culling\",\n    \"level_streaming\",\n    \"lod\"\n   ],\n   \"started_at\": \"2026-08-19T10:35:10.139992+00:00\",\n   \"sample_count\": 60,\n   \"duration\": 29.5\n  },\n  {\n   \"name\": \"gui-run\",\n   \"description\": \"fixture gui-run\",\n   \"dataset\": \"synthetic:2000:7\",\n   \"template\": \"T1\",\n   \"optimizations\": [\n    \"frustum_culling\",\n    \"lod\"\n   ],\n   \"started_at\": \"2026-08-19T10:35:10.163823+00:00\",\n   \"sample_count\": 60,\n   \"duration\": 29.5\n  }\n ]\n}\n",
  "/sessions/fix-a": "{\n \"schema_version\": 1,\n \"name\": \"fix-a\",\n \"description\": \"fixture fix-a\",\n \"dataset\": \"synthetic:2000:7\",\n \"template\": \"T1\",\n \"optimizations\": [],\n \"started_at\": \"2026-08-19T10:35:10.114389+00:00\",\n \"sample_interval_ms\": 500.0,\n \"samples\": [\n  {\n   \"t\": 0.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 0.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 1.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 1.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 2.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 2.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 3.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 3.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 4.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 4.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 5.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 5.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375798,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 6.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612903,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 6.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 7.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 7.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 1088.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 8.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 8.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375787,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 9.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.1832212156129,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 9.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 10.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 10.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 11.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438708,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 11.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 12.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 12.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 13.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 13.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 14.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 14.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 15.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 15.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375794,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 16.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 16.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1004.2229123600034,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 17.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 997.9688548431487,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 17.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 18.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 18.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375784,\n   \"ram_mb\": 981.175641193033,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 19.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 19.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 972.2229123600034,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 20.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 968.574374157796,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 20.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562418,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 21.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438709,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 21.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 22.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.26584774442729,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 22.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 960.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 23.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 23.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.1352549156242,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 24.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.816778784387104,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 24.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624245,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 25.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 968.5743741577959,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 25.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375823,\n   \"ram_mb\": 972.2229123600033,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 26.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 26.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375777,\n   \"ram_mb\": 981.1756411930331,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 27.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 27.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 28.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 997.9688548431488,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 28.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375766,\n   \"ram_mb\": 1004.2229123600033,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 29.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  },\n  {\n   \"t\": 29.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375755,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 2.4385600000000003\n  }\n ]\n}\n",
  "/sessions/fix-b": "{\n \"schema_version\": 1,\n \"name\": \"fix-b\",\n \"description\": \"fixture fix-b\",\n \"dataset\": \"synthetic:2000:7\",\n \"template\": \"T1\",\n \"optimizations\": [\n  \"frustum_culling\",\n  \"lod\"\n ],\n \"started_at\": \"2026-08-19T10:35:10.121167+00:00\",\n \"sample_interval_ms\": 500.0,\n \"samples\": [\n  {\n   \"t\": 0.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 0.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 1.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 1.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 2.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 2.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 3.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 3.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 4.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 4.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 5.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 5.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375798,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 6.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612903,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 6.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 7.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 7.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 1088.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 8.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 8.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375787,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 9.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.1832212156129,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 9.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 10.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 10.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 11.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438708,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 11.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 12.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 12.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 13.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 13.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 14.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 14.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 15.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 15.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375794,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 16.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 16.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1004.2229123600034,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 17.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 997.9688548431487,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 17.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 18.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 18.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375784,\n   \"ram_mb\": 981.175641193033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 19.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 19.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 972.2229123600034,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 20.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 968.574374157796,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 20.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562418,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 21.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438709,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 21.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 22.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.26584774442729,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 22.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 960.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 23.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 23.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.1352549156242,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 24.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.816778784387104,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 24.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624245,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 25.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 968.5743741577959,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 25.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375823,\n   \"ram_mb\": 972.2229123600033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 26.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 26.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375777,\n   \"ram_mb\": 981.1756411930331,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 27.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 27.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 28.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 997.9688548431488,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 28.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375766,\n   \"ram_mb\": 1004.2229123600033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 29.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 29.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375755,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.35992\n  }\n ]\n}\n",
  "/sessions/fix-c": "{\n \"schema_version\": 1,\n \"name\": \"fix-c\",\n \"description\": \"fixture fix-c\",\n \"dataset\": \"synthetic:2000:7\",\n \"template\": \"T1\",\n \"optimizations\": [\n  \"distance_culling\",\n  \"frustum_culling\",\n  \"level_streaming\",\n  \"lod\"\n ],\n \"started_at\": \"2026-08-19T10:35:10.139992+00:00\",\n \"sample_interval_ms\": 500.0,\n \"samples\": [\n  {\n   \"t\": 0.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 0.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 1.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 1.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 2.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 2.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 3.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 3.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 4.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 4.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 5.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 5.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375798,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 6.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612903,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 6.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 7.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 7.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 1088.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 8.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 8.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375787,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 9.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.1832212156129,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 9.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 10.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 10.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 11.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438708,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 11.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 12.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 12.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 13.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 13.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 14.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 14.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 15.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 15.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375794,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 16.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 16.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1004.2229123600034,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 17.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 997.9688548431487,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 17.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 18.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 18.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375784,\n   \"ram_mb\": 981.175641193033,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 19.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 19.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 972.2229123600034,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 20.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 968.574374157796,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 20.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562418,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 21.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438709,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 21.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 22.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.26584774442729,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 22.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 960.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 23.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 23.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.1352549156242,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 24.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.816778784387104,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 24.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624245,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 25.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 968.5743741577959,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 25.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375823,\n   \"ram_mb\": 972.2229123600033,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 26.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 26.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375777,\n   \"ram_mb\": 981.1756411930331,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 27.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 27.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 28.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 997.9688548431488,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 28.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375766,\n   \"ram_mb\": 1004.2229123600033,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 29.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.23436\n  },\n  {\n   \"t\": 29.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375755,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.23436\n  }\n ]\n}\n",
  "/sessions/gui-run": "{\n \"schema_version\": 1,\n \"name\": \"gui-run\",\n \"description\": \"fixture gui-run\",\n \"dataset\": \"synthetic:2000:7\",\n \"template\": \"T1\",\n \"optimizations\": [\n  \"frustum_culling\",\n  \"lod\"\n ],\n \"started_at\": \"2026-08-19T10:35:10.163823+00:00\",\n \"sample_interval_ms\": 500.0,\n \"samples\": [\n  {\n   \"t\": 0.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 0.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 1.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 1.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 2.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 2.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 3.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 3.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 4.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 4.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 5.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.0,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 5.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375798,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 6.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612903,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 6.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 7.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 7.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 1088.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 8.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 1087.6494013035694,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 8.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375787,\n   \"ram_mb\": 1086.6014464469636,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 9.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.1832212156129,\n   \"ram_mb\": 1084.8676170428898,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 9.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 1082.4669092891265,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 10.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 1079.425625842204,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 10.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562421,\n   \"ram_mb\": 1075.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 11.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438708,\n   \"ram_mb\": 1071.5612688305532,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 11.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 1066.824358806967,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 12.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1061.6182561467183,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 12.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 1056.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 13.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 1050.0311451568512,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 13.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.135254915624216,\n   \"ram_mb\": 1043.7770876399966,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 14.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.8167787843871,\n   \"ram_mb\": 1037.3063482123366,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 14.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624216,\n   \"ram_mb\": 1030.6898216491297,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 15.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 1024.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 15.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375794,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 16.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 16.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.86474508437579,\n   \"ram_mb\": 1004.2229123600034,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 17.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 997.9688548431487,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 17.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 18.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 18.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375784,\n   \"ram_mb\": 981.175641193033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 19.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 19.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375784,\n   \"ram_mb\": 972.2229123600034,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 20.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 34.99999999999999,\n   \"ram_mb\": 968.574374157796,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 20.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.63525491562418,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 21.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.81677878438709,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 21.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.13525491562421,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 22.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.26584774442729,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 22.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 50.0,\n   \"ram_mb\": 960.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 23.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 49.265847744427305,\n   \"ram_mb\": 960.3505986964306,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 23.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 47.1352549156242,\n   \"ram_mb\": 961.3985535530364,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 24.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 43.816778784387104,\n   \"ram_mb\": 963.1323829571102,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 24.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 39.635254915624245,\n   \"ram_mb\": 965.5330907108736,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 25.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 35.00000000000001,\n   \"ram_mb\": 968.5743741577959,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 25.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375823,\n   \"ram_mb\": 972.2229123600033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 26.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.18322121561291,\n   \"ram_mb\": 976.4387311694468,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 26.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375777,\n   \"ram_mb\": 981.1756411930331,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 27.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.7341522555727,\n   \"ram_mb\": 986.3817438532817,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 27.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.0,\n   \"ram_mb\": 992.0,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 28.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 20.734152255572695,\n   \"ram_mb\": 997.9688548431488,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 28.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 22.864745084375766,\n   \"ram_mb\": 1004.2229123600033,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 29.0,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 26.183221215612896,\n   \"ram_mb\": 1010.6936517876634,\n   \"gpu_frame_time_ms\": 0.35992\n  },\n  {\n   \"t\": 29.5,\n   \"fps\": 2.0,\n   \"frame_time_ms\": 500.0,\n   \"cpu_load_pct\": 30.364745084375755,\n   \"ram_mb\": 1017.3101783508702,\n   \"gpu_frame_time_ms\": 0.35992\n  }\n ]\n}\n",
  "/analytics/compare?a=fix-a&b=fix-b": "{\n \"a\": \"fix-a\",\n \"b\": \"fix-b\",\n \"verdicts\": [\n  {\n   \"metric\": \"fps\",\n   \"winner\": \"tie\",\n   \"mean_a\": 2.0,\n   \"mean_b\": 2.0\n  },\n  {\n   \"metric\": \"frame_time_ms\",\n   \"winner\": \"tie\",\n   \"mean_a\": 500.0,\n   \"mean_b\": 500.0\n  },\n  {\n   \"metric\": \"cpu_load_pct\",\n   \"winner\": \"tie\",\n   \"mean_a\": 35.0,\n   \"mean_b\": 35.0\n  },\n  {\n   \"metric\": \"ram_mb\",\n   \"winner\": \"tie\",\n   \"mean_a\": 1024.0,\n   \"mean_b\": 1024.0\n  },\n  {\n   \"metric\": \"gpu_frame_time_ms\",\n   \"winner\": \"B\",\n   \"mean_a\": 2.4385600000000003,\n   \"mean_b\": 0.35992\n  }\n ]\n}\n",
  "/analytics/compare?a=fix-a&b=fix-b&t0=5&t1=20": "{\n \"a\": \"fix-a\",\n \"b\": \"fix-b\",\n \"verdicts\": [\n  {\n   \"metric\": \"fps\",\n   \"winner\": \"tie\",\n   \"mean_a\": 2.0,\n   \"mean_b\": 2.0\n  },\n  {\n   \"metric\": \"frame_time_ms\",\n   \"winner\": \"tie\",\n   \"mean_a\": 500.0,\n   \"mean_b\": 500.0\n  },\n  {\n   \"metric\": \"cpu_load_pct\",\n   \"winner\": \"tie\",\n   \"mean_a\": 31.944958944512077,\n   \"mean_b\": 31.944958944512077\n  },\n  {\n   \"metric\": \"ram_mb\",\n   \"winner\": \"tie\",\n   \"mean_a\": 1043.696657226042,\n   \"mean_b\": 1043.696657226042\n  },\n  {\n   \"metric\": \"gpu_frame_time_ms\",\n   \"winner\": \"B\",\n   \"mean_a\": 2.4385600000000003,\n   \"mean_b\": 0.35992\n  }\n ]\n}\n",
  "/analytics/threshold?ids=fix-a%2Cfix-b%2Cfix-c&metric=fps&value=30": "{\n \"metric\": \"fps\",\n \"threshold\": 30.0,\n \"sessions\": [\n  \"fix-a\",\n  \"fix-b\",\n  \"fix-c\"\n ],\n \"fractions\": [\n  0.0,\n  0.0,\n  0.0\n ]\n}\n",
  "/analytics/multiples?ids=fix-a%2Cfix-b%2Cfix-c&metric=fps&points=16": "{\n \"metric\": \"fps\",\n \"target_points\": 16,\n \"series\": [\n  {\n   \"name\": \"fix-a\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0\n   ]\n  },\n  {\n   \"name\": \"fix-b\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0\n   ]\n  },\n  {\n   \"name\": \"fix-c\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0,\n    2.0\n   ]\n  }\n ]\n}\n",
  "/analytics/multiples?ids=fix-a%2Cfix-b%2Cfix-c&metric=gpu_frame_time_ms&points=16": "{\n \"metric\": \"gpu_frame_time_ms\",\n \"target_points\": 16,\n \"series\": [\n  {\n   \"name\": \"fix-a\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003,\n    2.4385600000000003\n   ]\n  },\n  {\n   \"name\": \"fix-b\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992,\n    0.35992\n   ]\n  },\n  {\n   \"name\": \"fix-c\",\n   \"t\": [\n    0.921875,\n    2.765625,\n    4.609375,\n    6.453125,\n    8.296875,\n    10.140625,\n    11.984375,\n    13.828125,\n    15.671875,\n    17.515625,\n    19.359375,\n    21.203125,\n    23.046875,\n    24.890625,\n    26.734375,\n    28.578125\n   ],\n   \"values\": [\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436,\n    0.23436\n   ]\n  }\n ]\n}\n",
  "/analytics/threshold?ids=fix-a%2Cfix-b%2Cfix-c&metric=gpu_frame_time_ms&value=1.5": "{\n \"metric\": \"gpu_frame_time_ms\",\n \"threshold\": 1.5,\n \"sessions\": [\n  \"fix-a\",\n  \"fix-b\",\n  \"fix-c\"\n ],\n \"fractions\": [\n  0.0,\n  1.0,\n  1.0\n ]\n}\n",
};
