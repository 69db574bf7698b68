"""Renderer-agnostic lab for measuring rendering optimizations on
scientific datasets: deterministic benchmark templates, telemetry,
session logs, and comparative analytics."""

from .analytics import (SessionSummary, ThresholdReport, TimeWindow, Verdict,
                        compare, compare_all, small_multiples, summarize,
                        threshold_report)
from .catalog import (FAMILIES, IMPLEMENTED, METRIC_KINDS, OBJECT_KINDS,
                      PRIMITIVES, TECHNIQUES, RunProfile, catalog_json,
                      family_color, list_families, list_techniques, technique,
                      validate_profile)
from .datasets import list_datasets, resolve_dataset, synthetic_scene
from .errors import (EmptyInputError, EmptyWindowError, FetchError,
                     FetchTimeoutError, FormatError, InvalidArgumentError,
                     ParseError, ProfileError, SessionFormatError,
                     UnsupportedModeError, VizlabError)
from .fields import (FieldTexture, FieldTextureArray, StructuredGrid,
                     build_time_array, derive_vorticity, load_manifest,
                     parse_dat, sample, sample_channels, transcode,
                     write_manifest)
from .geom import AABB
from .ingest import (Molecule, assign_lod_groups, fetch_pdb, infer_bonds,
                     parse_pdb)
from .optimizer import FrameCullStats, VisibleSet, run_pipeline
from .particles import EmitterRegion, ParticleSystem
from .render import DrawStats, FrameBuffer, reference_render, render_frame
from .scene import (Camera, EmissiveCurve, Scene, SceneStyle, WhiskerSelection,
                    apply_whisker, scene_from_field, scene_from_molecule)
from .telemetry import (FrameSample, PlatformProbe, Recorder, Session,
                        SyntheticProbe, export_session, load_session,
                        parse_session)
from .templates import (build_schedule, camera_at, normalize_template,
                        parse_timestep, run_template, template_label)

__version__ = "0.1.0"
