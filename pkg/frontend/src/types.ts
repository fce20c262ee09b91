/** Wire types of the analysis service (/api/v1). */

export interface Roi {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface UploadResponse {
  session: string;
  width: number;
  height: number;
}

export interface MorphometryFields {
  area: number;
  perimeter: number;
  compactness: number;
  major_axis: number;
  minor_axis: number;
  axis_spacing: number;
  varconvex: number;
  ncc: number | null;
}

export interface ColorimetryFields {
  red_count: number;
  white_count: number;
  pct_red: number;
  pct_white: number;
  mean_color: [number, number, number];
  mean_red_color: [number, number, number] | null;
  mean_white_color: [number, number, number] | null;
  uniform: boolean;
}

export interface IsolationFields {
  /** Cell mask as [row, start, length] runs, ROI-relative pixels. */
  runs: Array<[number, number, number]>;
}

export interface Report {
  schema: string;
  roi: Roi;
  label: string;
  morphometry: MorphometryFields;
  colorimetry: ColorimetryFields;
  isolation: IsolationFields | null;
  trace: string[];
}

export interface ServiceError {
  error: string;
  detail: string;
}

export type ThresholdOverrides = Partial<{
  compactness_gate: number;
  spacing_gate: number;
  healthy_white_min: number;
  healthy_white_max: number;
  annulocyte_white_min: number;
  sickle_red_min: number;
  ncc_sickle: number;
}>;
