from flask import request
from flask_restful import Resource

from hochschild.errors import ValidationError
from hochschild.jobs.job_spec import spec_from_dict
from run.job_runner import JobRunner


def validation_error(error: ValidationError):
    return {"field": error.field, "message": error.message}, 400


class JobsResource(Resource):

    @staticmethod
    def get():
        """Get a list of IDs for all finished jobs."""
        return JobRunner().get_finished_jobs()

    @staticmethod
    def post():
        """Run the job spec in the request body and return its jobId and report"""
        try:
            spec = spec_from_dict(request.get_json(silent=True))
        except ValidationError as error:
            return validation_error(error)
        job_id, report = JobRunner().run(spec)
        return {"jobId": job_id, "report": report.to_dict()}
