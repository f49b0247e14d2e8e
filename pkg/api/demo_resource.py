from flask import request
from flask_restful import Resource

from hochschild.jobs.demos import demo_names, demo_spec
from run.job_runner import JobRunner


class DemoResource(Resource):

    @staticmethod
    def get():
        """Run the built-in example given by the name parameter"""
        name = request.args.get("name")
        if name not in demo_names():
            return {"field": "name", "message": "unknown demo %r, choose from %s" % (name, ", ".join(demo_names()))}, 400
        job_id, report = JobRunner().run(demo_spec(name))
        return {"jobId": job_id, "report": report.to_dict()}
