from flask import request
from flask_restful import Resource

from run.job_runner import JobRunner


class JobResource(Resource):

    @staticmethod
    def get():
        """Get the report of the job identified by the jobId parameter"""
        job_id = request.args.get("jobId")
        if job_id is None:
            return {"field": "jobId", "message": "is required"}, 400
        report = JobRunner().get_report(job_id)
        if report:
            return report.to_dict()
        return "Job not found", 404
